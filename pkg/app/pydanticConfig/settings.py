from typing import List

from dotenv import load_dotenv
from pydantic_settings import BaseSettings

from config_profile import DOTENV_FILE

load_dotenv(DOTENV_FILE)


class Settings(BaseSettings):
    """Load configuration from environment variables (.env file)."""
    # Truncation
    CUBIX_MAX_DIM: int = 4
    DEFAULT_TRUNCATION: int = 3

    # Derived functor runs
    DEFAULT_SEEDS: List[int] = [0, 1, 2]

    # Logging
    LOG_DIR: str = "logs"
    LOG_FILE: str = "cubix.log"
    LOG_LEVEL: str = "INFO"
    CONSOLE_LOG_LEVEL: str = "WARNING"

    # Fixtures and acceptance grid
    GOLDEN_DIR: str = "tests/fixtures/golden"
    ACCEPTANCE_CONFIG: str = "app/inputconfig/config.yml"

    class Config:
        env_file = DOTENV_FILE
        case_sensitive = False


settings = Settings()
