#include "phibound/intseries.hpp"

// IntSeries is header-only; this TU anchors the library target.
