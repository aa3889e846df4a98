#pragma once

#include <tb/biorth.hpp>
#include <tb/derivagram.hpp>
#include <tb/distribution.hpp>
#include <tb/errors.hpp>
#include <tb/expr.hpp>
#include <tb/interval.hpp>
#include <tb/jet.hpp>
#include <tb/quad.hpp>
#include <tb/sampling.hpp>
#include <tb/series.hpp>
#include <tb/signal.hpp>
#include <tb/specfun.hpp>
