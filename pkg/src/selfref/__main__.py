from selfref.cli import main

main()
