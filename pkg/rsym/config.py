#!/usr/bin/env python3
"""
RSym - Configuración
Desarrollado por: Vicente Alonso

Parámetros leídos de variables de entorno RSYM_* (opcionalmente desde un
archivo .env) y configuración del logging.
"""

import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, field_validator

from .fields import Field, parse_field

logger = logging.getLogger(__name__)

ENV_PREFIX = "RSYM_"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class RSymSettings(BaseModel):
    """
    Parámetros de ejecución
    """
    field: str = "Q"
    degree_cap: int = 12
    pn_max_n: int = 6
    random_seed: int = 0
    soundness_terms: int = 500
    soundness_assignments: int = 3
    hall_trials: int = 200
    ideal_support: int = 1
    ideal_degree_cap: int = 6
    closure_max_rounds: int = 64
    log_level: str = "INFO"
    log_file: Optional[Path] = None

    @field_validator("field")
    @classmethod
    def _valid_field(cls, value: str) -> str:
        # NonPrimeModulus / ParseError se propagan tal cual
        return parse_field(value).tag

    @field_validator(
        "degree_cap", "pn_max_n", "soundness_terms", "soundness_assignments",
        "hall_trials", "ideal_support", "ideal_degree_cap", "closure_max_rounds",
    )
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("debe ser un entero positivo")
        return value

    @field_validator("log_level")
    @classmethod
    def _valid_level(cls, value: str) -> str:
        level = value.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"nivel de logging desconocido: {value}")
        return level

    @property
    def scalar_field(self) -> Field:
        return parse_field(self.field)


def _load_env_file(env_file: Optional[str]) -> bool:
    """Cargar .env si python-dotenv está disponible"""
    if not env_file:
        return False
    try:
        from dotenv import load_dotenv
    except ImportError:
        logger.debug("python-dotenv no disponible; se usan solo variables de entorno")
        return False
    return load_dotenv(env_file)


def _env_values() -> Dict[str, Any]:
    values: Dict[str, Any] = {}
    for name in RSymSettings.model_fields:
        raw = os.getenv(ENV_PREFIX + name.upper())
        if raw is not None and raw != "":
            values[name] = raw
    return values


def load_settings(env_file: Optional[str] = ".env", **overrides: Any) -> RSymSettings:
    """
    Construir la configuración: .env, variables RSYM_* y sobrescrituras

    Args:
        env_file: Ruta del archivo .env (None para no leerlo)
        **overrides: Valores que prevalecen sobre el entorno (se ignoran los None)
    """
    _load_env_file(env_file)
    values = _env_values()
    values.update({k: v for k, v in overrides.items() if v is not None})
    settings = RSymSettings(**values)
    logger.debug(f"Configuración cargada: {settings.model_dump()}")
    return settings


_settings: Optional[RSymSettings] = None


def get_settings() -> RSymSettings:
    """Instancia compartida de la configuración"""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def reset_settings() -> None:
    global _settings
    _settings = None


def setup_logging(level: str = "INFO", log_file: Optional[Path] = None) -> None:
    """
    Logging a stderr (stdout queda para la salida de la CLI) y opcionalmente a archivo
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT, handlers=handlers, force=True)
