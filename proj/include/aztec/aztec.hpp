#pragma once

#include "delannoy.hpp"
#include "domains.hpp"
#include "exact.hpp"
#include "formulas.hpp"
#include "partition.hpp"
#include "paths.hpp"
#include "render.hpp"
#include "sequences.hpp"
#include "tableaux.hpp"
#include "verify.hpp"
