"""Точка входа HTTP-сервиса: uvicorn main:app или python main.py."""
import os

import uvicorn

from hyperspectra.api import app

if __name__ == "__main__":
    uvicorn.run(app, host=os.getenv("HOST", "127.0.0.1"), port=int(os.getenv("PORT", "8000")))
