#pragma once

// Umbrella header.

#include "arrovian/axioms.hpp"
#include "arrovian/enumerate.hpp"
#include "arrovian/errors.hpp"
#include "arrovian/io.hpp"
#include "arrovian/profile.hpp"
#include "arrovian/relation.hpp"
#include "arrovian/search.hpp"
#include "arrovian/swf.hpp"
#include "arrovian/ternary.hpp"
#include "arrovian/tuple.hpp"
#include "arrovian/witness.hpp"
