"""
Конфигурация приложения
"""
from fractions import Fraction
import os

from dotenv import load_dotenv
from pydantic_settings import BaseSettings

load_dotenv()


class Settings(BaseSettings):
    # Семейства зарядов и генерируемые семейства H
    MAX_FAMILY: int = int(os.getenv("CHARGEKIT_MAX_FAMILY", "10000"))

    # Пополнение: ε = 2^-CAPTURE_EXPONENT, шаг сетки = 2^-GRID_EXPONENT
    CAPTURE_EXPONENT: int = int(os.getenv("CHARGEKIT_CAPTURE_EXPONENT", "10"))
    GRID_EXPONENT: int = int(os.getenv("CHARGEKIT_GRID_EXPONENT", "8"))

    # Теорема Яна
    YAN_MAX_SPACE: int = int(os.getenv("CHARGEKIT_YAN_MAX_SPACE", "12"))
    SAMPLE_SEED: int = int(os.getenv("CHARGEKIT_SAMPLE_SEED", "0"))
    SAMPLE_COUNT: int = int(os.getenv("CHARGEKIT_SAMPLE_COUNT", "100"))

    # Логирование
    DEBUG: bool = os.getenv("CHARGEKIT_DEBUG", "False").lower() == "true"
    LOG_LEVEL: str = os.getenv("CHARGEKIT_LOG_LEVEL", "WARNING")

    class Config:
        env_file = ".env"
        env_prefix = "CHARGEKIT_"
        extra = "ignore"

    @property
    def capture_eps(self) -> Fraction:
        """Радиус захвата атомов при построении семейства H"""
        return Fraction(1, 2 ** self.CAPTURE_EXPONENT)

    @property
    def grid_step(self) -> Fraction:
        """Шаг сетки покрытия носителя плотности"""
        return Fraction(1, 2 ** self.GRID_EXPONENT)


settings = Settings()
