from functools import lru_cache
from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

# HeisChar 项目根目录
HEISCHAR_ROOT = Path(__file__).resolve().parent.parent.parent


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # Project
    PROJECT_NAME: str = "HeisChar"
    VERSION: str = "0.1.0"
    DESCRIPTION: str = "Exact character table of H1(q) x| Sp(2,q)"

    # Debug
    DEBUG: bool = False

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_TO_FILE: bool = True
    LOGS_DIR: str = str(HEISCHAR_ROOT / "logs")

    # 枚举上限：enumerate_group 允许的最大 |G|
    ENUMERATION_CAP: int = 10_000_000
    # 暴力校验（轨道 / 诱导特征标 / Burnside）允许的最大 |G|；默认只放行 q=3，q=5（|G|=15000）需显式调高
    BRUTEFORCE_MAX_ORDER: int = 648

    # build_table 的行并行线程数（1 表示串行）
    THREAD_COUNT: int = 1

    # Numerics
    NUMERIC_TOLERANCE: float = 1e-9
    ORACLE_TOLERANCE: float = 1e-8
    ORACLE_SEED: int = 1729
    ORACLE_MAX_ATTEMPTS: int = 8

    # 输出中复数近似值保留的有效位数
    OUTPUT_DIGITS: int = 12


@lru_cache
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
