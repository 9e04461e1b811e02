# fsrlab/settings.py
from pathlib import Path
import os

# Optional: load .env locally
try:
    from dotenv import load_dotenv
except Exception:
    load_dotenv = None

BASE_DIR = Path(__file__).resolve().parent.parent
if load_dotenv:
    load_dotenv(BASE_DIR / ".env")

# -------------------- helpers --------------------
def env_bool(key: str, default: str = "0") -> bool:
    return os.getenv(key, default).strip().lower() in {"1", "true", "yes", "on"}

def env_csv(key: str, default: str = "") -> list[str]:
    return [item.strip() for item in os.getenv(key, default).split(",") if item.strip()]

# -------------------- core security / env --------------------
DEBUG = env_bool("DEBUG", "1")
SECRET_KEY = os.getenv("SECRET_KEY", "change-me")

ALLOWED_HOSTS = env_csv("ALLOWED_HOSTS", "127.0.0.1,localhost,testserver")

# -------------------- installed apps --------------------
INSTALLED_APPS = [
    "binmach",
]

# -------------------- middleware --------------------
MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.middleware.common.CommonMiddleware",
]

ROOT_URLCONF = "fsrlab.urls"

WSGI_APPLICATION = "fsrlab.wsgi.application"

# -------------------- database --------------------
# Synthesis is stateless; nothing is persisted.
DATABASES = {}

# -------------------- i18n --------------------
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

# -------------------- logging --------------------
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").strip().upper() or "WARNING"

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "{levelname} {name}: {message}", "style": "{"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain"},
    },
    "loggers": {
        "binmach": {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False},
    },
}

# -------------------- toolkit --------------------
# Fixed toolkit constants; commands never read these from the environment.
BINMACH = {
    # 2-input AND, 2-input XOR, one register stage
    "UNIT_COSTS": {"and2": 1, "xor2": 1, "reg": 2},
    "WORKERS": 4,
    "MAX_PARALLEL": 16,
    "SEQUENCE_LINE_WIDTH": 64,
}
