from .manifest import SongManifest, ValidationReport, build_manifest, load_manifest, validate_manifest
from .split import split_stem
from .synth import write_test_stems
from .wavio import Stem, read_stem, write_stem

__all__ = [
    "SongManifest",
    "Stem",
    "ValidationReport",
    "build_manifest",
    "load_manifest",
    "read_stem",
    "split_stem",
    "validate_manifest",
    "write_stem",
    "write_test_stems",
]
