import json
import math
import os
from typing import Any, Optional, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel

from utils.ml_logging import get_logger

# Set up logging
logger = get_logger()

SIGNIFICANT_DIGITS = 15
FLOAT_FORMAT = f"%.{SIGNIFICANT_DIGITS}g"


def _round(value: float) -> Union[float, str]:
    if not math.isfinite(value):
        return str(value)
    rounded = float(f"{value:.{SIGNIFICANT_DIGITS}g}")
    return 0.0 if rounded == 0 else rounded


def to_jsonable(obj: Any) -> Any:
    """
    Convert reports into plain JSON values with floats rounded to 15 significant digits.

    Complex numbers with a vanishing imaginary part become real; others become
    {"re": ..., "im": ...}. Arrays become nested lists, pydantic models their dumps.
    """
    if isinstance(obj, BaseModel):
        return to_jsonable(obj.model_dump())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        z = complex(obj)
        if abs(z.imag) < 10.0 ** (-SIGNIFICANT_DIGITS):
            return _round(z.real)
        return {"re": _round(z.real), "im": _round(z.imag)}
    if isinstance(obj, (float, np.floating)):
        return _round(float(obj))
    if hasattr(obj, "value") and isinstance(obj.value, str):
        return obj.value
    return obj


def dumps(obj: Any) -> str:
    """Deterministic JSON: sorted keys, fixed float precision."""
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False)


def write_text(text: str, path: Optional[str] = None) -> None:
    """Write to ``path`` when given, otherwise to stdout."""
    if path is None:
        print(text)
        return
    try:
        directory = os.path.dirname(path)
        if directory and not os.path.exists(directory):
            os.makedirs(directory)
        with open(path, "w", encoding="utf-8") as file:
            file.write(text + "\n")
        logger.info(f"Output written to {path}.")
    except Exception as e:
        logger.error(f"Error occurred while writing output to {path}: {e}")
        raise


def save_dataframe(df: pd.DataFrame, path: Optional[str] = None, file_format: str = "csv") -> str:
    """
    Serialize the dataframe and write it to ``path`` (stdout when None).

    :param df: Input DataFrame.
    :param path: Destination file, or None for stdout.
    :param file_format: 'csv' or 'json'.
    :return: The serialized text.
    :raises ValueError: If the specified file format is unsupported.
    """
    try:
        if file_format == "csv":
            text = df.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n").rstrip("\n")
        elif file_format == "json":
            text = dumps(df.to_dict(orient="records"))
        else:
            raise ValueError(
                f"Unsupported file format: {file_format}. Supported formats are: ['csv', 'json']."
            )
        write_text(text, path)
        return text
    except Exception as e:
        logger.error(f"Error while saving DataFrame: {e}")
        raise
