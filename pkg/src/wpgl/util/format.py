import pandas as pd


def bounded_multiline_message(input_lines, maxlength=200) -> list[str]:
    lines = []
    for line in input_lines:
        while len(line) > maxlength:
            lines += [line[0:maxlength]]
            line = line[maxlength:]
        if len(line) > 0:
            lines += [line]
    if not lines:
        return []

    max_line_length = max(len(line) for line in lines)
    border = "#" * (max_line_length + 4)
    return [border] + [f"# {line.ljust(max_line_length)} #" for line in lines] + [border]


def print_bounded_multiline_message(input_lines, maxlength=200):
    for line in bounded_multiline_message(input_lines, maxlength):
        print(line)


def table_text(rows: list[dict]) -> str:
    if not rows:
        return "(empty)"
    return pd.DataFrame(rows).to_string(index=False)
