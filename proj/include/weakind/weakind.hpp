#pragma once

#include "bracketing.hpp"
#include "claims.hpp"
#include "decider.hpp"
#include "formal_sum.hpp"
#include "formula.hpp"
#include "induction_lab.hpp"
#include "models.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"
#include "puiseux.hpp"
#include "search.hpp"
#include "term.hpp"
#include "unipoly.hpp"
