#include <doctest.h>
#include <fitcq/model.hpp>
