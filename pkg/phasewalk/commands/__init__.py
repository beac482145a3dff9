"""
CLI commands. Each module registers itself with ``phasewalk.registry.command``.
"""
