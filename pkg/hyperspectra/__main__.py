from hyperspectra.cli import main

main()
