from .improvement import ImprovementCertificate, ImprovementSearch, find_improvement
from .certification import WindowCertificate, certify_orbit, forbidden_words, periodic_maximizer_search
from .hruskova import (HRUSKOVA_EDGES, HRUSKOVA_WEIGHTS, hruskova_shift, hruskova_weights, hruskova_system, hruskova_word,
        hruskova_windows)
