import functools
import threading
import time
from typing import Any, Callable

from loguru import logger


def log_thread(func: Callable) -> Callable:
    """Decorator: log worker thread and elapsed time of a pool task"""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        thread_name: str = threading.current_thread().name
        start_time: float = time.time()
        logger.debug(f"Task {func.__name__} started on {thread_name}")
        result: Any = func(*args, **kwargs)
        logger.debug(
            f"Task {func.__name__} finished on {thread_name} in {time.time() - start_time:.2f}s"
        )
        return result

    return wrapper
