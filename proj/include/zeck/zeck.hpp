#pragma once

#include "zeck/bigint.hpp"
#include "zeck/collections.hpp"
#include "zeck/commands.hpp"
#include "zeck/duality.hpp"
#include "zeck/error.hpp"
#include "zeck/extremal.hpp"
#include "zeck/numeration.hpp"
#include "zeck/spectra.hpp"
