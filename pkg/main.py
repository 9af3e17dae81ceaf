"""
Точка входа командной строки: twinbench <команда> ...
"""
import sys

from dotenv import load_dotenv

# .env загружается до первого чтения конфигурации
load_dotenv()

from service_factory import service_factory  # noqa: E402
from src.cli import main  # noqa: E402
from src.services.logger_service import logger  # noqa: E402


if __name__ == "__main__":
    config = service_factory.get_config()
    logger.debug("Конфигурация загружена", f"window={config.verify_window}, torsion_scan={config.torsion_scan}")
    sys.exit(main())
