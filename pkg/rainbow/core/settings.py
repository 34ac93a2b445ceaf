"""Environment-level defaults.

Uses Pydantic settings to read ``RAINBOW_*`` environment variables and an
optional ``.env`` file. Command-line flags override these values.
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Defaults loaded from the environment."""

    budget: int = Field(10**9, ge=1, description="Maximum elementary predicate calls per enumeration")
    threads: int = Field(1, ge=1, description="Worker processes for enumeration")
    log_level: str = Field("INFO", description="Logging level name")

    model_config = SettingsConfigDict(
        env_prefix="RAINBOW_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )
