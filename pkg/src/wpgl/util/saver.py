import json
import os


def assure_path(path):
    if path == "":
        return ""
    if not os.path.exists(path):
        os.makedirs(path, exist_ok=True)
    return path


def canonical_json(data) -> str:
    """Byte-stable rendering: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def save_json(path, name, data):
    if ".json" not in name:
        name = name + ".json"
    assure_path(path)
    filename = os.path.join(path, name)
    with open(filename, "w") as f:
        f.write(canonical_json(data))
    return name
