from flagdesigns.models import *
from flagdesigns.utils import *
from flagdesigns.core import *
from flagdesigns.classifier import *
