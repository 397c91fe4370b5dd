from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    PROJECT_NAME: str = "sqct"
    CIRCUIT_FORMAT_VERSION: str = "v1"

    # Working precision (bits) for certified interval evaluation
    PRECISION_BITS: int = 128

    # Below this value the four-square solver enumerates instead of sampling
    FOUR_SQUARES_BRUTEFORCE_LIMIT: int = 1 << 16

    # Adaptive floor refinement gives up above this precision
    MAX_FLOOR_PRECISION_BITS: int = 1 << 16

    PEEPHOLE: bool = True
    LOG_LEVEL: str = "WARNING"
    DEFAULT_SEED: int = 0
    BENCH_WORKERS: int = 4

    @field_validator("PRECISION_BITS")
    @classmethod
    def check_precision(cls, v: int) -> int:
        if v < 16:
            raise ValueError(f"PRECISION_BITS must be at least 16, got {v}")
        return v

    @field_validator("FOUR_SQUARES_BRUTEFORCE_LIMIT")
    @classmethod
    def check_bruteforce_limit(cls, v: int) -> int:
        if not 16 <= v <= 10**6:
            raise ValueError(f"FOUR_SQUARES_BRUTEFORCE_LIMIT must lie in [16, 10**6], got {v}")
        return v

    @field_validator("LOG_LEVEL")
    @classmethod
    def normalize_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {v!r}")
        return level

    @field_validator("BENCH_WORKERS")
    @classmethod
    def check_workers(cls, v: int) -> int:
        if v < 1:
            raise ValueError("BENCH_WORKERS must be positive")
        return v

    model_config = SettingsConfigDict(
        env_prefix="SQCT_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )


settings = Settings()
