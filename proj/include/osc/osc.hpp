#pragma once

#include "osc/dense.hpp"
#include "osc/fft.hpp"
#include "osc/field.hpp"
#include "osc/heisenberg.hpp"
#include "osc/io.hpp"
#include "osc/oscillator.hpp"
#include "osc/spectral.hpp"
#include "osc/tori.hpp"
#include "osc/verify.hpp"
#include "osc/weil.hpp"
