#pragma once

#include "untwist/catalog.hpp"
#include "untwist/core.hpp"
#include "untwist/exact_linalg.hpp"
#include "untwist/knot_invariants.hpp"
#include "untwist/laurent.hpp"
#include "untwist/linking_forms.hpp"
#include "untwist/obstruction.hpp"
#include "untwist/report_json.hpp"
