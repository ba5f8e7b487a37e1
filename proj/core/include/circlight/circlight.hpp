#pragma once

#include "circlight/spectral.hpp"
#include "circlight/hermitian.hpp"
#include "circlight/circular.hpp"
#include "circlight/entanglement.hpp"
