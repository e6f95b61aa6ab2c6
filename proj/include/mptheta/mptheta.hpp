#pragma once

#include "mptheta/errors.hpp"
#include "mptheta/gamma.hpp"
#include "mptheta/half_int.hpp"
#include "mptheta/json_io.hpp"
#include "mptheta/properties.hpp"
#include "mptheta/rep.hpp"
#include "mptheta/symbols.hpp"
#include "mptheta/text.hpp"
#include "mptheta/theta.hpp"
#include "mptheta/universe.hpp"
#include "mptheta/verdicts.hpp"
