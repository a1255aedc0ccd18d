#pragma once

#include "grlb/closed_forms.hpp"
#include "grlb/engine.hpp"
#include "grlb/error.hpp"
#include "grlb/output.hpp"
#include "grlb/polynomial.hpp"
#include "grlb/quadrature.hpp"
#include "grlb/rational.hpp"
#include "grlb/root_system.hpp"
#include "grlb/tables.hpp"
#include "grlb/verify.hpp"
