from flagdesigns.core.permcore import *
from flagdesigns.core.gf import *
from flagdesigns.core.designs import *
from flagdesigns.core.psl2orbits import *
from flagdesigns.core.fileformat import *
from flagdesigns.core.witt import *
