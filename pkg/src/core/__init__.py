from src.core.utils import to_camel as to_camel
from src.core.utils import normalize as normalize
from src.core.utils import trial_rng as trial_rng
