#pragma once

#include "equality.hpp"
#include "errors.hpp"
#include "lr.hpp"
#include "mf.hpp"
#include "partition.hpp"
#include "schubert.hpp"
#include "skew_diagram.hpp"
