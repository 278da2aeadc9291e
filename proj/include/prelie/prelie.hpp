#pragma once

#include "algebra.hpp"
#include "cochain.hpp"
#include "crossed_module.hpp"
#include "errors.hpp"
#include "free_prelie.hpp"
#include "functors.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "scalar.hpp"
