"""pytest configuration module."""

import os.path


pytest_plugins = "mobicell.testsupport.array_cmp"


project_root = os.path.dirname(__file__)
setup_file = os.path.join(project_root, 'setup.py')
ignored_dirs = [os.path.join(project_root, name)
                for name in ('examples', 'configs')]


def pytest_ignore_collect(collection_path, config):
    path = str(collection_path)
    if path == setup_file:
        return True
    if path in ignored_dirs:
        return True
