"""
Run configuration built from command-line flags
"""
from typing import Any, Optional

from pydantic import BaseModel, Field, field_validator

from src.utils.constants import OutputConstants


class ParallelConfig(BaseModel):
    workers: int = Field(default=1, ge=1)


class LoggingConfig(BaseModel):
    level: str = "WARNING"
    file: Optional[str] = None

    @field_validator("level")
    @classmethod
    def normalize_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {v}")
        return level


class OutputConfig(BaseModel):
    format: str = OutputConstants.DEFAULT_FORMAT

    @field_validator("format")
    @classmethod
    def check_format(cls, v: str) -> str:
        if v not in OutputConstants.FORMATS:
            raise ValueError(f"Unknown output format: {v}")
        return v


class Config(BaseModel):
    """Main configuration class"""
    parallel: ParallelConfig = Field(default_factory=ParallelConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    @classmethod
    def from_args(cls, args: Any) -> "Config":
        """Build configuration from an argparse namespace

        Missing attributes fall back to defaults, so subcommands without
        a given flag still produce a valid configuration.
        """
        return cls(
            parallel=ParallelConfig(workers=getattr(args, "workers", 1) or 1),
            logging=LoggingConfig(
                level=getattr(args, "log_level", "WARNING") or "WARNING",
                file=getattr(args, "log_file", None),
            ),
            output=OutputConfig(
                format=getattr(args, "format", None) or OutputConstants.DEFAULT_FORMAT
            ),
        )
