#include "overconv/errors.hpp"
