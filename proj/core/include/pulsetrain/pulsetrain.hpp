#pragma once

#include "pulsetrain/dispersion.hpp"
#include "pulsetrain/dressed.hpp"
#include "pulsetrain/errors.hpp"
#include "pulsetrain/modulation.hpp"
#include "pulsetrain/oracle.hpp"
#include "pulsetrain/pulse_analysis.hpp"
