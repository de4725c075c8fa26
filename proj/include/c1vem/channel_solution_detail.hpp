#pragma once

// Generated by tools/generate_channel_solution.py; do not edit by hand.

#include <cmath>

namespace c1vem::detail {

inline double channel_value(double x, double y) {
    const double x0 = M_PI*x;
    return -pow(x, 2)*pow(x - 1, 2)*pow(y - 1.0/20.0*sin(x0), 2)*(sin(5*x)*sin(7*y) + 3)*pow(-y + (1.0/20.0)*sin(3*x0) + 1, 2);
}

inline void channel_gradient(double x, double y, double& gx, double& gy) {
    const double x0 = x - 1;
    const double x1 = M_PI*x;
    const double x2 = 20*y;
    const double x3 = 3*x1;
    const double x4 = -x2 + sin(x3) + 20;
    const double x5 = 5*x;
    const double x6 = sin(x5);
    const double x7 = 7*y;
    const double x8 = sin(x7);
    const double x9 = x6*x8 + 3;
    const double x10 = x2 - sin(x1);
    const double x11 = x10*x4;
    const double x12 = x*x11;
    const double x13 = 2*x9;
    const double x14 = x0*x11;
    gx = (1.0/160000.0)*x0*x12*(2*M_PI*x*x0*x4*x9*cos(x1) - 6*x0*x1*x10*x9*cos(x3) - x12*x13 - x13*x14 - x14*x5*x8*cos(x5));
    gy = (1.0/160000.0)*pow(x, 2)*pow(x0, 2)*x11*(40*x10*x9 - 7*x11*x6*cos(x7) - 40*x4*x9);
}

inline void channel_hessian(double x, double y, double& hxx, double& hxy, double& hyy) {
    const double x0 = 20*y;
    const double x1 = M_PI*x;
    const double x2 = sin(x1);
    const double x3 = x0 - x2;
    const double x4 = pow(x3, 2);
    const double x5 = pow(x, 2);
    const double x6 = x4*x5;
    const double x7 = 5*x;
    const double x8 = sin(x7);
    const double x9 = 7*y;
    const double x10 = sin(x9);
    const double x11 = x10*x8;
    const double x12 = x11 + 3;
    const double x13 = 3*x1;
    const double x14 = sin(x13);
    const double x15 = -x0 + x14 + 20;
    const double x16 = pow(x15, 2);
    const double x17 = x12*x16;
    const double x18 = 2*x17;
    const double x19 = x - 1;
    const double x20 = pow(x19, 2);
    const double x21 = x20*x4;
    const double x22 = cos(x7);
    const double x23 = x10*x22;
    const double x24 = 20*x16*x23;
    const double x25 = x19*x6;
    const double x26 = x*x19;
    const double x27 = cos(x1);
    const double x28 = cos(x13);
    const double x29 = x20*x5;
    const double x30 = x15*x4;
    const double x31 = x23*x30;
    const double x32 = x12*x15;
    const double x33 = 24*x28*x32;
    const double x34 = pow(M_PI, 2);
    const double x35 = x1*x19;
    const double x36 = x27*x35;
    const double x37 = x16*x4;
    const double x38 = cos(x9);
    const double x39 = x38*x8;
    const double x40 = 14*x39;
    const double x41 = x37*x40;
    const double x42 = x28*x35;
    const double x43 = 80*x;
    const double x44 = x17*x3;
    const double x45 = x32*x4;
    const double x46 = x16*x3;
    const double x47 = 200*x26;
    const double x48 = 80*x19;
    const double x49 = x3*x32;
    const double x50 = 800*x12;
    const double x51 = 560*x39;
    hxx = (1.0/20000.0)*M_PI*x*x12*x16*x20*x27*x3 - 1.0/160000.0*x*x21*x24 - 1.0/160000.0*x1*x21*x33 + (1.0/8000.0)*M_PI*x10*x16*x20*x22*x27*x3*x5 + (1.0/6400.0)*x10*x16*x20*x4*x5*x8 + (3.0/20000.0)*x12*x15*x20*x27*x28*x3*x34*x5 + (1.0/20000.0)*M_PI*x12*x16*x19*x27*x3*x5 + (9.0/80000.0)*x12*x20*x34*x4*x5*(x14*x15 - pow(x28, 2)) - 1.0/20000.0*x17*x26*x4 - 1.0/160000.0*x18*x21 - 1.0/160000.0*x18*x29*x34*(x2*x3 + pow(x27, 2)) - 1.0/160000.0*x18*x6 - 1.0/160000.0*x24*x25 - 1.0/160000.0*M_PI*x25*x33 - 3.0/8000.0*M_PI*x28*x29*x31;
    hxy = -1.0/160000.0*x26*(x*x41 + x1*x27*x48*x49 - 120*x12*x4*x42 - 40*x17*x36 + x19*x41 + 35*x22*x26*x37*x38 + x23*x46*x47 + 42*x30*x39*x42 - x31*x47 - x36*x40*x46 + 240*x42*x49 + x43*x44 - x43*x45 + x44*x48 - x45*x48);
    hyy = -1.0/160000.0*x29*(-49*x11*x37 + x16*x50 - x30*x51 + x4*x50 + x46*x51 - 3200*x49);
}

inline double channel_load(double x, double y) {
    const double x0 = 20*y;
    const double x1 = M_PI*x;
    const double x2 = sin(x1);
    const double x3 = -x2;
    const double x4 = x0 + x3;
    const double x5 = pow(x4, 2);
    const double x6 = 5*x;
    const double x7 = sin(x6);
    const double x8 = 7*y;
    const double x9 = sin(x8);
    const double x10 = x7*x9;
    const double x11 = x10 + 3;
    const double x12 = x11*x5;
    const double x13 = pow(x, 2);
    const double x14 = (1.0/50.0)*x13;
    const double x15 = 3*x1;
    const double x16 = sin(x15);
    const double x17 = -x0 + x16 + 20;
    const double x18 = pow(x17, 2);
    const double x19 = x11*x18;
    const double x20 = (1.0/5.0)*x5;
    const double x21 = x - 1;
    const double x22 = pow(x21, 2);
    const double x23 = cos(x6);
    const double x24 = x23*x9;
    const double x25 = x*x24;
    const double x26 = x22*x25;
    const double x27 = (1.0/5.0)*x18;
    const double x28 = x21*x24;
    const double x29 = x13*x28;
    const double x30 = x*x21;
    const double x31 = (2.0/25.0)*x30;
    const double x32 = (1.0/50.0)*x22;
    const double x33 = pow(M_PI, 2);
    const double x34 = x13*x22;
    const double x35 = x11*x34;
    const double x36 = x33*x35;
    const double x37 = cos(x15);
    const double x38 = cos(x1);
    const double x39 = x37*x38;
    const double x40 = cos(x8);
    const double x41 = M_PI*x24;
    const double x42 = x34*x41;
    const double x43 = x38*x42;
    const double x44 = (4.0/25.0)*x17;
    const double x45 = x11*x22;
    const double x46 = x1*x38;
    const double x47 = x11*x13;
    const double x48 = M_PI*x21;
    const double x49 = x38*x48;
    const double x50 = x17*x37;
    const double x51 = x18*x5;
    const double x52 = (3.0/2000.0)*x51;
    const double x53 = x40*x7;
    const double x54 = (7.0/500.0)*x53;
    const double x55 = x18*x4;
    const double x56 = x13*x55;
    const double x57 = x1*x50;
    const double x58 = x48*x50;
    const double x59 = (3.0/20000.0)*x18;
    const double x60 = x17*x4;
    const double x61 = x10*x60;
    const double x62 = x34*x61;
    const double x63 = x18*x34;
    const double x64 = x33*x53;
    const double x65 = x*x22;
    const double x66 = x23*x40;
    const double x67 = (7.0/50.0)*x66;
    const double x68 = x34*x5;
    const double x69 = x17*x5;
    const double x70 = x34*x4;
    const double x71 = (9.0/2000.0)*x37*x41;
    const double x72 = x22*x53;
    const double x73 = (7.0/125.0)*x60;
    const double x74 = x13*x53;
    const double x75 = (9.0/5000.0)*x12;
    const double x76 = x10*x51;
    const double x77 = x1*x37;
    const double x78 = (21.0/125.0)*x60;
    const double x79 = (31.0/2500.0)*x10;
    const double x80 = x34*x60;
    const double x81 = pow(x38, 2);
    const double x82 = x2*x4;
    const double x83 = x81 + x82;
    const double x84 = x33*x83;
    const double x85 = 5*y;
    const double x86 = x38*(x3 + x85);
    const double x87 = pow(M_PI, 3);
    const double x88 = x24*x87;
    const double x89 = (1.0/2500.0)*x19*x86;
    const double x90 = x21*x87;
    const double x91 = x16 - x85 + 5;
    const double x92 = pow(x37, 2);
    const double x93 = x16*x17;
    const double x94 = -x92 + x93;
    const double x95 = x59*x84;
    const double x96 = (3.0/2000.0)*x18*x84;
    const double x97 = pow(M_PI, 4);
    const double x98 = x35*x97;
    const double x99 = x50*x83;
    const double x100 = x*x87;
    const double x101 = x38*x94;
    const double x102 = (27.0/5000.0)*x101;
    const double x103 = 2688000*x53;
    const double x104 = 235200*x10;
    const double x105 = 54880*x53;
    return (9.0/1250.0)*x*x11*x17*x21*x33*x37*x38*x4 + (8.0/25.0)*x*x11*x17*x21*x4 + (3.0/5000.0)*M_PI*x*x11*x18*x38*x4 + (27.0/5000.0)*x*x11*x21*x33*x5*x94 + (12.0/25.0)*M_PI*x*x11*x22*x37*x4 + (27.0/2500.0)*x*x11*x22*x37*x5*x87*x91 + (2.0/25.0)*M_PI*x*x11*x22*x38*x4 + (7.0/125.0)*x*x17*x21*x40*x5*x7 + (9.0/500.0)*x*x17*x22*x23*x33*x37*x38*x4*x9 + (4.0/5.0)*x*x17*x22*x23*x4*x9 + (7.0/50.0)*x*x17*x22*x23*x40*x5 + (93.0/2500.0)*M_PI*x*x17*x22*x37*x5*x7*x9 + (3.0/500.0)*M_PI*x*x18*x21*x23*x38*x4*x9 + (31.0/2500.0)*x*x18*x21*x5*x7*x9 + (37.0/2000.0)*x*x18*x22*x23*x5*x9 + (7.0/250.0)*M_PI*x*x18*x22*x38*x40*x7 + (27.0/2000.0)*x*x22*x23*x33*x5*x9*x94 + (21.0/250.0)*M_PI*x*x22*x37*x40*x5*x7 - 279.0/10000.0*x10*x33*x68*x94 - x100*x102*x4*x45 - 9.0/5000.0*x100*x45*x99 - 27.0/2000.0*x101*x70*x88 - x102*x4*x47*x90 + (1.0/25.0)*x11*x13*x17*x2*x22*x33 + (9.0/5000.0)*x11*x13*x17*x33*x37*x38*x4 + (2.0/25.0)*x11*x13*x17*x4 + (1.0/80000.0)*x11*x13*x18*x22*x97*(-3*pow(x2, 2) + 4*x81 + x82) + (12.0/25.0)*M_PI*x11*x13*x21*x37*x4 + (27.0/2500.0)*x11*x13*x21*x37*x5*x87*x91 + (2.0/25.0)*M_PI*x11*x13*x21*x38*x4 + (9.0/50.0)*x11*x13*x22*x33*x94 + (27.0/20000.0)*x11*x13*x22*x83*x94*x97 + (27.0/20000.0)*x11*x13*x33*x5*x94 + (9.0/5000.0)*x11*x17*x22*x33*x37*x38*x4 + (2.0/25.0)*x11*x17*x22*x4 + (3.0/5000.0)*M_PI*x11*x18*x21*x38*x4 + (27.0/20000.0)*x11*x22*x33*x5*x94 - x12*x14 - x12*x31 - x12*x32 - 81.0/80000.0*x12*x34*x97*(3*pow(x16, 2) - 4*x92 + x93) - x12*x59 + (9.0/500.0)*x13*x17*x21*x23*x33*x37*x38*x4*x9 + (4.0/5.0)*x13*x17*x21*x23*x4*x9 + (7.0/50.0)*x13*x17*x21*x23*x40*x5 + (93.0/2500.0)*M_PI*x13*x17*x21*x37*x5*x7*x9 + (111.0/2000.0)*M_PI*x13*x17*x22*x23*x37*x5*x9 + (21.0/250.0)*x13*x17*x22*x33*x37*x38*x40*x7 + (7.0/500.0)*x13*x17*x22*x33*x40*x7*x83 + (7.0/500.0)*x13*x17*x40*x5*x7 + (37.0/2000.0)*x13*x18*x21*x23*x5*x9 + (7.0/250.0)*M_PI*x13*x18*x21*x38*x40*x7 + (7.0/100.0)*M_PI*x13*x18*x22*x23*x38*x40 + (31.0/10000.0)*x13*x18*x22*x33*x7*x83*x9 + (7.0/40.0)*x13*x18*x22*x4*x40*x7 + (1.0/4.0)*x13*x18*x22*x7*x9 + (3.0/2000.0)*M_PI*x13*x18*x23*x38*x4*x9 + (31.0/10000.0)*x13*x18*x5*x7*x9 + (27.0/2000.0)*x13*x21*x23*x33*x5*x9*x94 + (21.0/250.0)*M_PI*x13*x21*x37*x40*x5*x7 + (6.0/5.0)*M_PI*x13*x22*x23*x37*x4*x9 + (21.0/100.0)*M_PI*x13*x22*x23*x37*x40*x5 + (27.0/1000.0)*x13*x22*x23*x37*x5*x87*x9*x91 + (1.0/5.0)*M_PI*x13*x22*x23*x38*x4*x9 + (63.0/500.0)*x13*x22*x33*x4*x40*x7*x94 + (1.0/4.0)*x13*x22*x5*x7*x9 - x13*x69*x71 - x13*x89*x90 - x14*x19 - x14*x45*x84 - 9.0/25.0*x16*x36*x4 - 63.0/1000.0*x16*x64*x68 + (7.0/500.0)*x17*x22*x40*x5*x7 - 2.0/5.0*x17*x43 + (3.0/2000.0)*M_PI*x18*x22*x23*x38*x4*x9 + (31.0/10000.0)*x18*x22*x5*x7*x9 - 3.0/5000.0*x19*x30*x84 - x19*x31 - x19*x32 - 7.0/1000.0*x2*x63*x64 - x20*x26 - x20*x29 - x21*x56*x67 - x22*x46*x55*x79 - x22*x54*x55 - x22*x69*x71 - x25*x52 - x26*x27 - x26*x96 - x27*x29 - x28*x52 - 9.0/500.0*x28*x69*x77 - x29*x96 - 7.0/125.0*x30*x53*x55 - 93.0/2500.0*x33*x39*x62 - 7.0/40.0*x34*x53*x69 - 123.0/6400.0*x34*x76 - 9.0/2000.0*x34*x88*x99 - 1.0/160000.0*x34*(3840000*x10 - x103*x17 + x103*x4 - x104*x18 - x104*x5 - x105*x55 + x105*x69 + 940800*x61 + 2401*x76 + 11520000) - 6.0/25.0*x36*x39 - x37*x48*x74*x78 - 21.0/50.0*M_PI*x37*x66*x80 - M_PI*x38*x67*x80 - 27.0/2500.0*x39*x4*x91*x98 - 21.0/250.0*x39*x64*x70 - 3.0/5.0*x42*x50 - 37.0/2000.0*x43*x55 - x44*x45*x46 - x44*x47*x49 - 6.0/25.0*x45*x57 - x45*x95 - x46*x72*x73 - 6.0/25.0*x47*x58 - 9.0/5000.0*x47*x90*x99 - x47*x95 - x49*x56*x79 - x49*x73*x74 - 3.0/2500.0*x50*x86*x98 - x54*x56 - x55*x65*x67 - x57*x75 - x58*x75 - x62 - 1.0/1000.0*x63*x86*x88 - x65*x87*x89 - x72*x77*x78;
}

}  // namespace c1vem::detail
