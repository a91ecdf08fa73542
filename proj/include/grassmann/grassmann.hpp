#pragma once

#include "grassmann/errors.hpp"
#include "grassmann/scalar.hpp"
#include "grassmann/exterior.hpp"
#include "grassmann/hasse_schmidt.hpp"
#include "grassmann/quasi_inverse.hpp"
#include "grassmann/json_io.hpp"
#include "grassmann/random_instances.hpp"
#include "grassmann/trials.hpp"
#include "grassmann/verification.hpp"
