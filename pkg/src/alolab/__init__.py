"""Value/cost-governed label selection and labeling-sprint simulation.

Subpackages cover the full pipeline: synthetic benchmark generation,
dataset handling, reference learners, value/cost scoring, the adaptive
labeling loop with a simulated annotator, label-error injection and
auditing, and named experiment recipes with CSV/JSON reports.
"""

__version__ = "0.1.0"

CONFIG_SCHEMA_VERSION = 1
