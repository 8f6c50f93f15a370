import click
import importlib
import logging
from typing import Optional
from pathlib import Path

log = logging.getLogger(__name__)


@click.command()
@click.option(
    "--model",
    "-m",
    help="The python class object to export as a schema. Must derive from pydantic.BaseModel",
    required=True,
    default="constrained_lcs.models.SolveReport",
    show_default=True,
)
@click.option(
    "--output",
    "-o",
    "output_path",
    help="Write the schema to this file instead of stdout",
    required=False,
    type=click.types.Path(
        file_okay=True, dir_okay=False, writable=True, path_type=Path
    ),
)
def schema(model: str, output_path: Optional[Path]):
    """
    Prints the JSON schema of a report model (by default the `solve --format json` document)
    """
    parts = model.rsplit(".", 1)
    if len(parts) != 2:
        raise click.UsageError(f"Could not split {model} into package and class")
    library, target_class_str = parts
    log.info(f"Attempting import of {target_class_str} from {library}")
    try:
        module = importlib.import_module(library)
        target_class = getattr(module, target_class_str)
    except (ImportError, AttributeError) as exc:
        raise click.UsageError(f"Failed to import {model}: {exc}")

    schema_text = target_class.schema_json(indent=2)
    if output_path:
        output_path.write_text(schema_text)
    else:
        click.echo(schema_text)
