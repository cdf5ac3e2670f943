
if __name__ == "__main__":
    from setup import check_python_version
    check_python_version()

    from cli.dispatcher import main

    main()
