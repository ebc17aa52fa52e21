import sys
from collections.abc import Iterable
from multiprocessing import get_context
from shutil import get_terminal_size

from .timer import Timer


class ProgressBar:
    """A progress bar which prints the progress to stderr, away from results on stdout."""

    def __init__(self, task_num=0, bar_width=50, start=True, file=sys.stderr, enabled=True):
        self.task_num = task_num
        self.bar_width = bar_width
        self.completed = 0
        self.file = file
        self.enabled = enabled
        if start:
            self.start()

    @property
    def terminal_width(self):
        width, _ = get_terminal_size()
        return width

    def _write(self, msg):
        if self.enabled:
            self.file.write(msg)
            self.file.flush()

    def start(self):
        if self.task_num > 0:
            self._write(f'[{" " * self.bar_width}] 0/{self.task_num}, elapsed: 0s, ETA:')
        else:
            self._write("completed: 0, elapsed: 0s")
        self.timer = Timer()

    def update(self, num_tasks=1):
        assert num_tasks > 0
        self.completed += num_tasks
        elapsed = self.timer.since_start()
        fps = self.completed / elapsed if elapsed > 0 else float("inf")
        if self.task_num > 0:
            percentage = self.completed / float(self.task_num)
            eta = int(elapsed * (1 - percentage) / percentage + 0.5)
            msg = f"\r[{{}}] {self.completed}/{self.task_num}, {fps:.1f} task/s, elapsed: {int(elapsed + 0.5)}s, ETA: {eta:5}s"
            bar_width = min(self.bar_width, int(self.terminal_width - len(msg)) + 2, int(self.terminal_width * 0.6))
            bar_width = max(2, bar_width)
            mark_width = int(bar_width * self.completed / float(self.task_num))
            self._write(msg.format(">" * mark_width + " " * (bar_width - mark_width)))
        else:
            self._write(f"\rcompleted: {self.completed}, elapsed: {int(elapsed + 0.5)}s, {fps:.1f} tasks/s")

    def finish(self):
        self._write("\n")


def _split_tasks(tasks):
    if isinstance(tasks, tuple):
        assert len(tasks) == 2
        assert isinstance(tasks[0], Iterable)
        assert isinstance(tasks[1], int)
        return tasks[0], tasks[1]
    elif isinstance(tasks, Iterable):
        tasks = list(tasks)
        return tasks, len(tasks)
    raise TypeError('"tasks" must be an iterable object or a (iterator, int) tuple')


def track_progress(func, tasks, bar_width=50, file=sys.stderr, enabled=True, **kwargs):
    """Apply ``func`` to every task in a plain loop while drawing a progress bar.

    Args:
        func (callable): The function to be applied to each task.
        tasks (list or tuple[Iterable, int]): A list of tasks or (tasks, total num).
        bar_width (int): Width of progress bar.
        enabled (bool): Draw the bar at all.
    Returns:
        list: The task results, in task order.
    """
    tasks, task_num = _split_tasks(tasks)
    prog_bar = ProgressBar(task_num, bar_width, file=file, enabled=enabled)
    results = []
    for task in tasks:
        results.append(func(task, **kwargs))
        prog_bar.update()
    prog_bar.finish()
    return results


def track_parallel_progress(func, tasks, nproc, initializer=None, initargs=(), bar_width=50, chunksize=1, file=sys.stderr, enabled=True):
    """Apply ``func`` to every task on a spawn-based process pool while drawing a progress bar.

    Results come back through ``Pool.imap`` and therefore keep the task order whatever the scheduling.

    Args:
        func (callable): A picklable module-level function applied to each task.
        tasks (list or tuple[Iterable, int]): A list of tasks or (tasks, total num).
        nproc (int): Process count.
        initializer (callable | None): Run once in every worker process.
        initargs (tuple): Arguments of ``initializer``.
        chunksize (int): Tasks sent to a worker per round trip.
    Returns:
        list: The task results, in task order.
    """
    tasks, task_num = _split_tasks(tasks)
    if not isinstance(initargs, tuple):
        raise TypeError('"initargs" must be a tuple')
    prog_bar = ProgressBar(task_num, bar_width, file=file, enabled=enabled)
    results = []
    with get_context("spawn").Pool(nproc, initializer, initargs) as pool:
        for result in pool.imap(func, tasks, chunksize):
            results.append(result)
            prog_bar.update()
    prog_bar.finish()
    return results
