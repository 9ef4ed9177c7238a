from pydantic_settings import BaseSettings
from typing import Literal, Optional


class Settings(BaseSettings):
    # Application
    app_name: str = "Stanley Depth Checker"
    app_version: str = "0.1.0"

    # Solver
    node_budget: int = 10**8
    solver_workers: int = 1

    # Output
    output_format: Literal["text", "machine"] = "text"
    log_level: str = "WARNING"

    # Probes
    probe_family_limit: int = 2**20
    probe_example_limit: int = 5
    probe_log_dir: Optional[str] = None

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        env_prefix = "SDEPTH_"


settings = Settings()
