"""Block-letter banner shown by `linkhom --verbose`."""
import sys
from typing import List, Optional, Sequence, TextIO

from termcolor import colored

from linkhom_core import VERSION

BLOCK = "█"
# Left to right, one band per color.
BANNER_PALETTE = ("light_cyan", "cyan", "light_blue", "blue")

LETTER_MAP = {
    "L": [
        "#      ","#      ","#      ","#      ","#      ","#      ","#######",
    ],
    "I": [
        " ##### ","   #   ","   #   ","   #   ","   #   ","   #   "," ##### ",
    ],
    "N": [
        "#     #","##    #","# #   #","#  #  #","#   # #","#    ##","#     #",
    ],
    "K": [
        "#    # ","#   #  ","#  #   ","###    ","#  #   ","#   #  ","#    # ",
    ],
    "H": [
        "#     #","#     #","#     #","#######","#     #","#     #","#     #",
    ],
    "O": [
        " ##### ","#     #","#     #","#     #","#     #","#     #"," ##### ",
    ],
    "M": [
        "#     #","##   ##","# # # #","#  #  #","#     #","#     #","#     #",
    ],
}


def banner_rows(text: str, gap: int = 2) -> List[str]:
    """Glyph rows for text, letters separated by gap blank columns."""
    glyphs = [LETTER_MAP[ch] for ch in text.upper()]
    return [(" " * gap).join(row) for row in zip(*glyphs)]


def column_palette(width: int, palette: Sequence[str] = BANNER_PALETTE) -> List[str]:
    return [palette[col * len(palette) // max(width, 1)] for col in range(width)]


def print_banner(text: str = "LINKHOM", stream: Optional[TextIO] = None):
    """Banner plus version line; plain blocks when the stream is not a terminal."""
    stream = stream or sys.stderr
    paint = bool(getattr(stream, "isatty", lambda: False)())
    rows = banner_rows(text)
    palette = column_palette(len(rows[0]))
    for row in rows:
        cells = []
        for col, mark in enumerate(row):
            if mark != "#":
                cells.append(" ")
            elif paint:
                cells.append(colored(BLOCK, palette[col], force_color=True))
            else:
                cells.append(BLOCK)
        print("".join(cells), file=stream)
    print(f"link homology of weighted homogeneous singularities, v{VERSION}", file=stream)
