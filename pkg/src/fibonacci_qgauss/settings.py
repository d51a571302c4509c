"""Application settings using Pydantic Settings."""

from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from fibonacci_qgauss.family.fibonacci import Convention

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


class Settings(BaseSettings):
    """Configuration loaded from environment variables (prefix QGAUSS_).

    Invalid values fail validation when ``get_settings()`` first runs.
    """

    model_config = SettingsConfigDict(
        env_prefix="QGAUSS_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Default bounds for `verify`, all within desk-scale caps
    qbinom_nmax: int = Field(30, ge=0)
    basis_nmax: int = Field(12, ge=0)
    recurrence_nmax: int = Field(20, ge=2)
    recurrence_jmax: int = Field(5, ge=0)
    family_nmax: int = Field(30, ge=0)
    family_jmax: int = Field(5, ge=0)
    gf_nmax: int = Field(4, ge=0)
    gf_primes: list[int] = [2, 3]
    series_order: int = Field(30, ge=2)
    series_lmax: int = Field(5, ge=0)

    default_convention: Convention = Convention.SHIFTED

    log_level: LogLevel = "WARNING"

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_level(cls, value: object) -> object:
        return value.upper() if isinstance(value, str) else value


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
