import os
from pathlib import Path

from dotenv import load_dotenv

# 從 .env 載入環境變數
load_dotenv()


def get_static_resolved_path(base_dir: Path, dir_name: str) -> Path:
    """Resolve dir_name under base_dir to an absolute path"""
    return (base_dir / dir_name).resolve()


# -----------------------------------------------------------------------
# Root Directory (core/) Path
# -----------------------------------------------------------------------
#
BASE_DIR_PATH: Path = Path(__file__).resolve().parent


# -----------------------------------------------------------------------
# === General Directory Path ===
# -----------------------------------------------------------------------
#
LOGS_DIR_PATH: Path = get_static_resolved_path(base_dir=BASE_DIR_PATH, dir_name="logs")
LOGS_DIR_PATH.mkdir(parents=True, exist_ok=True)  # 確保 logs 目錄存在
RESULTS_DIR_PATH: Path = get_static_resolved_path(
    base_dir=BASE_DIR_PATH, dir_name="pipeline/results"
)


# -----------------------------------------------------------------------
# === Cohomology Presentation Data ===
# -----------------------------------------------------------------------
# 內建的 F_2 上同調環表示（含 provenance 註解），檔名以 SmallGroups 編號命名
DATA_DIR_PATH: Path = get_static_resolved_path(
    base_dir=BASE_DIR_PATH, dir_name="cohomology/data"
)
BUILTIN_COHOM_FILES: dict = {
    "8#3": "8_3.txt",
    "32#27": "32_27.txt",
    "64#138": "64_138.txt",
}


# -----------------------------------------------------------------------
# === Workbench Settings（可由 .env 覆寫）===
# -----------------------------------------------------------------------
#
NUM_THREADS: int = int(os.getenv("WORKBENCH_THREADS") or "4")
DEGREE_BOUND: int = int(os.getenv("WORKBENCH_DEGREE_BOUND") or "6")
H3_RANK: int = int(os.getenv("WORKBENCH_H3_RANK") or "4")
ENUMERATION_BUDGET: int = int(os.getenv("WORKBENCH_ENUMERATION_BUDGET") or "1000000")
GAMMA_BUDGET: int = int(os.getenv("WORKBENCH_GAMMA_BUDGET") or "1000000")
LOG_LEVEL: str = os.getenv("WORKBENCH_LOG_LEVEL") or "INFO"
