#include "xg/xg.hpp"
int main(){return 0;}
