#include <doctest.h>
#include "resurgo/transseries.hpp"
