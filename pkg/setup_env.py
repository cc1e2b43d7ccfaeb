#!/usr/bin/env python3
"""
RSym - Script de Configuración
Desarrollado por: Vicente Alonso
"""

import sys
from pathlib import Path

from rsym.config import ENV_PREFIX, load_settings


def create_env_file(path: str = ".env") -> bool:
    """
    Crear archivo .env con la configuración por defecto
    """
    env_content = f"""# RSym - Variables de Entorno
# Desarrollado por: Vicente Alonso

# Cuerpo por defecto: Q, F2, F3, Fp:<p>
{ENV_PREFIX}FIELD=Q

# Forma normal
{ENV_PREFIX}DEGREE_CAP=12
{ENV_PREFIX}PN_MAX_N=6

# Muestreos
{ENV_PREFIX}RANDOM_SEED=0
{ENV_PREFIX}SOUNDNESS_TERMS=500
{ENV_PREFIX}SOUNDNESS_ASSIGNMENTS=3
{ENV_PREFIX}HALL_TRIALS=200

# Búsqueda en el ideal
{ENV_PREFIX}IDEAL_SUPPORT=1
{ENV_PREFIX}IDEAL_DEGREE_CAP=6

# Logging
{ENV_PREFIX}LOG_LEVEL=INFO
"""

    env_file = Path(path)

    if env_file.exists():
        print("Archivo .env ya existe")
        return True

    try:
        env_file.write_text(env_content, encoding="utf-8")
        print("Archivo .env creado correctamente")
        return True
    except OSError as e:
        print(f"Error creando archivo .env: {e}")
        return False


def main():
    """
    Función principal del script
    """
    print("=" * 60)
    print("RSYM - CONFIGURACIÓN")
    print("=" * 60)

    print("\nPaso 1: Creando archivo .env...")
    if not create_env_file():
        return False

    print("\nPaso 2: Validando la configuración...")
    try:
        settings = load_settings(".env")
    except Exception as e:
        print(f"Configuración no válida: {e}")
        return False

    print("\n" + "=" * 60)
    print("CONFIGURACIÓN COMPLETADA")
    print("=" * 60)
    for name, value in settings.model_dump().items():
        print(f"  {ENV_PREFIX}{name.upper()}: {value}")
    print("=" * 60)

    return True


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
