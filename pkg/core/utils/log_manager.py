"""Log Manager：workbench 的 loguru sink 設定"""

import sys
from pathlib import Path
from typing import Dict, Optional

from loguru import logger

from core.config import LOG_LEVEL, LOGS_DIR_PATH, RESULTS_DIR_PATH


class LogManager:
    """集中管理 console 與檔案 sink；同一路徑只加一次"""

    FILE_FORMAT: str = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} - {message}"
    ROTATION: str = "10 MB"
    RETENTION: str = "30 days"

    _sinks: Dict[str, int] = {}
    """log 檔路徑 → loguru handler id"""

    @staticmethod
    def setup_logger(log_file: str, log_dir: Optional[Path] = None, level: str = LOG_LEVEL) -> int:
        """
        - Description:
            加上一個檔案 sink；路徑已設定過時直接回傳原本的 handler id
        - Parameters:
            - log_file: str
                檔名，例如 "workbench.log"
            - log_dir: Optional[Path]
                預設為 LOGS_DIR_PATH
            - level: str
        - Return:
            - int
                loguru handler id
        """

        log_dir = LOGS_DIR_PATH if log_dir is None else log_dir
        log_dir.mkdir(parents=True, exist_ok=True)
        path: str = str(log_dir / log_file)
        if path in LogManager._sinks:
            return LogManager._sinks[path]

        handler: int = logger.add(
            path,
            rotation=LogManager.ROTATION,
            retention=LogManager.RETENTION,
            level=level,
            format=LogManager.FILE_FORMAT,
            enqueue=True,  # Thread-safe logging
        )
        LogManager._sinks[path] = handler
        return handler

    @staticmethod
    def setup_report_logger(command: str, level: str = LOG_LEVEL) -> int:
        """子命令的 log 與報告 CSV 放在同一個目錄，例如 results/verify.log"""

        return LogManager.setup_logger(f"{command}.log", log_dir=RESULTS_DIR_PATH, level=level)

    @staticmethod
    def setup_console(level: str = LOG_LEVEL) -> int:
        """
        - Description:
            以只含訊息的 stderr sink 取代 loguru 預設 handler，stdout 留給報告
        - Return:
            - int
                loguru handler id
        """

        logger.remove()
        LogManager._sinks.clear()
        return logger.add(sys.stderr, format="{message}", level=level.upper())
