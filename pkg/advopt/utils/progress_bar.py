from . import system


class ProgressBar(object):
    """
    Console progress bar for long sweeps. Prints nothing unless logging is on.
    """

    def __init__(self, start = 0, end = 100, label = "", logging = True, width = 50):
        self.start = start
        self.end = max(end, start + 1)
        self.label = label
        self.logging = logging
        self.width = width
        self.progression = self.start

    def progress(self, amount = 1):
        self.progression += amount
        self.update(self.progression)

    def update(self, progress):
        self.progression = progress
        if not self.logging:
            return
        filled = int(self.width * (self.progression - self.start) / (self.end - self.start))
        filled = min(max(filled, 0), self.width)
        string = "{}|{}{}|".format(self.label, "=" * filled, " " * (self.width - filled))

        system.format_print(string, bold=True, color=system.Color.BLUE, replace_with_next_line=True)

    def finish(self):
        self.progression = self.end
        if not self.logging:
            return

        string = "{}|{}|".format(self.label, "=" * self.width)
        system.format_print(string, bold=True, color=system.Color.GREEN, replace_with_next_line=True)

        print()
