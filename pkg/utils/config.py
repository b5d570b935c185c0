"""
Configuration module - loads environment variables for the logging layer.

Engine settings live in config/engine_config.py.
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# -------------------- Paths --------------------
LOG_DIR = Path(os.getenv("LOG_DIR", "./logs"))

# -------------------- Logging --------------------
LOG_LEVEL = os.getenv("W3_LOG_LEVEL", "INFO").upper()
