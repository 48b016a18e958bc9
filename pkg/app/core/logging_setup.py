import logging
import os

from rich.console import Console
from rich.logging import RichHandler

from app.pydanticConfig.settings import settings

_configured = False


def configure_logging(console_level: str = None) -> None:
    """File log under LOG_DIR plus a rich console handler on stderr."""
    global _configured
    if _configured:
        return
    os.makedirs(settings.LOG_DIR, exist_ok=True)
    logging.basicConfig(
        filename=os.path.join(settings.LOG_DIR, settings.LOG_FILE),
        level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
        format="%(asctime)s - %(levelname)s - %(message)s"
    )
    console = RichHandler(console=Console(stderr=True), show_path=False, markup=False)
    console.setLevel((console_level or settings.CONSOLE_LOG_LEVEL).upper())
    console.setFormatter(logging.Formatter("%(message)s"))
    logging.getLogger().addHandler(console)
    _configured = True
