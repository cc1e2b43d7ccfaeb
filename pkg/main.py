#!/usr/bin/env python3
"""
RSym - Punto de entrada
Desarrollado por: Vicente Alonso

Ejecuta la CLI de RSym sin instalar el paquete:

    python main.py verify-paper --quick
    python main.py normal-form "x2 x1"
"""

from rsym.cli import main

if __name__ == "__main__":
    main()
