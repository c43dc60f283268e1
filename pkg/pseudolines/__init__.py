__version_info__ = (1, 0, 0)
__version__ = '.'.join(str(i) for i in __version_info__)
