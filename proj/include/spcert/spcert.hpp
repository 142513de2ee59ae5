// Umbrella header.
#pragma once

#include "spcert/certify.hpp"
#include "spcert/cli.hpp"
#include "spcert/dyadic.hpp"
#include "spcert/energy.hpp"
#include "spcert/exact.hpp"
#include "spcert/gaussian.hpp"
#include "spcert/generate.hpp"
#include "spcert/geom4.hpp"
#include "spcert/linalg.hpp"
#include "spcert/set.hpp"
#include "spcert/set_io.hpp"
#include "spcert/sphere.hpp"
