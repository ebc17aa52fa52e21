from datetime import datetime, timezone
import time


class TimerError(Exception):
    def __init__(self, message):
        self.message = message
        super(TimerError, self).__init__(message)


class Timer:
    """Wall-clock timer.

    :Example:

    >>> timer = Timer()
    >>> run_dimension()
    >>> seconds = timer.since_start()
    """

    def __init__(self, start=True):
        self._is_running = False
        if start:
            self.start()

    def start(self):
        if not self._is_running:
            self._t_start = time.perf_counter()
            self._is_running = True
        self._t_last = time.perf_counter()

    def since_start(self):
        """Seconds since the timer started."""
        if not self._is_running:
            raise TimerError("timer is not running")
        self._t_last = time.perf_counter()
        return self._t_last - self._t_start


def get_time_stamp():
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def td_format(seconds):
    seconds = int(seconds)
    periods = [("d", 60 * 60 * 24), ("h", 60 * 60), ("m", 60), ("s", 1)]
    ret = ""
    for period_name, period_seconds in periods:
        if seconds >= period_seconds:
            period_value, seconds = divmod(seconds, period_seconds)
            ret += f"{period_value}{period_name}"
    return ret or "0s"
