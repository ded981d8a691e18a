#pragma once

#include "cleanmat/clean2.hpp"
#include "cleanmat/companion.hpp"
#include "cleanmat/error.hpp"
#include "cleanmat/factor.hpp"
#include "cleanmat/literal.hpp"
#include "cleanmat/matrix2.hpp"
#include "cleanmat/oracle.hpp"
#include "cleanmat/pi_regular.hpp"
#include "cleanmat/ring.hpp"
#include "cleanmat/ring_spec.hpp"
#include "cleanmat/roots.hpp"
#include "cleanmat/zmat.hpp"
