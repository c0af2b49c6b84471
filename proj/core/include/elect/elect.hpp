#pragma once

#include "elect/axioms.hpp"
#include "elect/baselines.hpp"
#include "elect/candidate_set.hpp"
#include "elect/divisor.hpp"
#include "elect/election.hpp"
#include "elect/errors.hpp"
#include "elect/io.hpp"
#include "elect/rational.hpp"
#include "elect/rules.hpp"
#include "elect/support.hpp"
