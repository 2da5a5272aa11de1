#pragma once

#include "hyperkin/calculus.hpp"
#include "hyperkin/config.hpp"
#include "hyperkin/csv.hpp"
#include "hyperkin/errors.hpp"
#include "hyperkin/eulersavary.hpp"
#include "hyperkin/hypernum.hpp"
#include "hyperkin/kinematics.hpp"
#include "hyperkin/svg.hpp"
