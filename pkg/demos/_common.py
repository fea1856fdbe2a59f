"""Shared plumbing for the demo scripts: the cached model and a test scene."""

import logging
from pathlib import Path

from semcodec import fixtures
from semcodec.evaluation import image_to_chw
from semcodec.modelfile import ModelBundle, load_model
from semcodec.semantics import FileAnnotationProvider, TaskSpec, ground

OUT = Path(__file__).parent / "_out"


def setup_logging():
    logging.basicConfig(level=logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")


def shape_task() -> TaskSpec:
    return TaskSpec(fixtures.TASK_NAME, fixtures.TASK_DESCRIPTION,
                    list(fixtures.SHAPE_LABELS))


def demo_model() -> ModelBundle:
    """Load the demo model, training it on the spot if it is missing."""
    root = OUT / "model"
    if not (root / "DONE").exists():
        print("no trained model yet, building one (takes a few minutes)")
        import train_codec
        train_codec.build(root)
    return load_model(root / "final" / "model.bin")


def demo_scene(size=(128, 128)):
    """A deterministic two-shape scene with grounded elements."""
    img, elements = fixtures.two_box_image(size)
    payload = {"image_id": "demo", "width": size[0], "height": size[1],
               "elements": elements}
    es = ground(image_to_chw(img), shape_task(),
                FileAnnotationProvider(payload), image_id="demo")
    return img, es
