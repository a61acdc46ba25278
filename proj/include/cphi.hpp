#pragma once

#include "cphi/collatz.hpp"
#include "cphi/digits_io.hpp"
#include "cphi/errors.hpp"
#include "cphi/farpoint.hpp"
#include "cphi/identities.hpp"
#include "cphi/periodic.hpp"
#include "cphi/phi.hpp"
#include "cphi/pseudoperiod.hpp"
#include "cphi/rational.hpp"
#include "cphi/window.hpp"
