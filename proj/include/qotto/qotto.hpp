#pragma once

#include "qotto/analysis.hpp"
#include "qotto/errors.hpp"
#include "qotto/matcore.hpp"
#include "qotto/qinfo.hpp"
#include "qotto/thermo.hpp"
#include "qotto/xymodel.hpp"
