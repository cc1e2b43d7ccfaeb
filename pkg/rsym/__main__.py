"""
RSym - Punto de entrada `python -m rsym`
Desarrollado por: Vicente Alonso
"""

from .cli import main

if __name__ == "__main__":
    main()
