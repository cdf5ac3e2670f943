import subprocess
import sys

REQUIRED_PYTHON_VERSION_MAJOR = 3
REQUIRED_PYTHON_VERSION_MINOR = 9


def check_python_version():
    python_version = sys.version_info
    if python_version.major < REQUIRED_PYTHON_VERSION_MAJOR or \
       (python_version.major == REQUIRED_PYTHON_VERSION_MAJOR and python_version.minor < REQUIRED_PYTHON_VERSION_MINOR):
        raise SystemError(
            "Your Python version must be at least {0}.{1}, found {2}.{3}"
                .format(REQUIRED_PYTHON_VERSION_MAJOR, REQUIRED_PYTHON_VERSION_MINOR,
                        python_version.major, python_version.minor)
        )


def setup_environment(requirements_path):
    check_python_version()

    def install_packages(package):
        print("Installing {}".format(package), file=sys.stderr)
        subprocess.check_call([sys.executable, '-m', 'pip', 'install', package])

    with open(requirements_path, 'r') as requirements_file:
        for dep in requirements_file:
            dep = dep.strip()
            if dep and not dep.startswith("#"):
                install_packages(dep)

    print("All the packages are installed successfully.", file=sys.stderr)


if __name__ == "__main__":
    from utils.utils import get_project_root
    setup_environment(get_project_root() + "/requirements.txt")
