'''
Live progress for long runs (spectra, table reproduction) on stderr.
'''

from __future__ import annotations

from contextlib import contextmanager

from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TextColumn, TimeElapsedColumn

_console = Console(stderr=True)


def _progress(enabled):
    return Progress(
        SpinnerColumn(),
        TextColumn("[bold cyan]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TextColumn("[green]{task.fields[note]}"),
        TimeElapsedColumn(),
        console=_console,
        transient=True,
        disable=not enabled,
    )


@contextmanager
def spectrum_progress(k, enabled=True):
    '''
    Yield an on_modulus callback for search.spectrum.

    The total is unknown until a ruler of length L appears; from then on the
    scan ends at 2L + 1 and the bar shows the remaining moduli.
    '''
    start = k * k - k + 1
    best = [None]
    with _progress(enabled) as bar:
        task = bar.add_task(f"MGR({k})", total=None, note="")

        def on_modulus(entry):
            if entry.length is not None and (best[0] is None or entry.length < best[0]):
                best[0] = entry.length
                bar.update(task, total=2 * best[0] + 1 - start)
            bar.update(task, advance=1, note=f"v={entry.v} {entry.status}")

        yield on_modulus


@contextmanager
def table_progress(orders, enabled=True):
    '''Yield an advance(k, note) callback, one step per order.'''
    with _progress(enabled) as bar:
        task = bar.add_task("table", total=len(orders), note="")

        def advance(k, note=""):
            bar.update(task, advance=1, note=f"k={k} {note}")

        yield advance
