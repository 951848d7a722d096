#pragma once

// Lebedev quadrature node/weight tables for the unit sphere.
// Generated by scripts/gen_lebedev_tables.py (scipy.integrate.lebedev_rule);
// do not edit by hand.  Weights sum to 4*pi.  Each rule is exact for all
// spherical harmonics up to its algebraic degree.

namespace emgest::detail {

struct LebedevNode {
    double x, y, z, w;
};

inline constexpr LebedevNode kLebedev6[6] = {
    {1, 0, 0, 2.0943951023931962},
    {-1, 0, 0, 2.0943951023931962},
    {0, 1, 0, 2.0943951023931962},
    {0, -1, 0, 2.0943951023931962},
    {0, 0, 1, 2.0943951023931962},
    {0, 0, -1, 2.0943951023931962},
};

inline constexpr LebedevNode kLebedev26[26] = {
    {1, 0, 0, 0.59839860068377015},
    {-1, 0, 0, 0.59839860068377015},
    {0, 1, 0, 0.59839860068377015},
    {0, -1, 0, 0.59839860068377015},
    {0, 0, 1, 0.59839860068377015},
    {0, 0, -1, 0.59839860068377015},
    {0, 0.70710678118654757, 0.70710678118654757, 0.47871888054701611},
    {0, -0.70710678118654757, 0.70710678118654757, 0.47871888054701611},
    {0, 0.70710678118654757, -0.70710678118654757, 0.47871888054701611},
    {0, -0.70710678118654757, -0.70710678118654757, 0.47871888054701611},
    {0.70710678118654757, 0, 0.70710678118654757, 0.47871888054701611},
    {0.70710678118654757, 0, -0.70710678118654757, 0.47871888054701611},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.47871888054701611},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.47871888054701611},
    {0.70710678118654757, 0.70710678118654757, 0, 0.47871888054701611},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.47871888054701611},
    {0.70710678118654757, -0.70710678118654757, 0, 0.47871888054701611},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.47871888054701611},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
};

inline constexpr LebedevNode kLebedev110[110] = {
    {1, 0, 0, 0.048107465851396594},
    {-1, 0, 0, 0.048107465851396594},
    {0, 1, 0, 0.048107465851396594},
    {0, -1, 0, 0.048107465851396594},
    {0, 0, 1, 0.048107465851396594},
    {0, 0, -1, 0.048107465851396594},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.12307173528167017},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.12307173528167017},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.12307173528167017},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.12307173528167017},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.12307173528167017},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.12307173528167017},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.12307173528167017},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.12307173528167017},
    {0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.10319173408833041},
    {-0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.10319173408833041},
    {0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.10319173408833041},
    {0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.10319173408833041},
    {-0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.10319173408833041},
    {-0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.10319173408833041},
    {0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.10319173408833041},
    {-0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.10319173408833041},
    {-0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.10319173408833041},
    {0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.10319173408833041},
    {0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.10319173408833041},
    {-0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.10319173408833041},
    {-0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.10319173408833041},
    {0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.10319173408833041},
    {-0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.10319173408833041},
    {0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.10319173408833041},
    {0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.10319173408833041},
    {-0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.10319173408833041},
    {0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.10319173408833041},
    {0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.10319173408833041},
    {-0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.10319173408833041},
    {-0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.10319173408833041},
    {0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.10319173408833041},
    {-0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.10319173408833041},
    {0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.1249450968725133},
    {-0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.1249450968725133},
    {0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.1249450968725133},
    {0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.1249450968725133},
    {-0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.1249450968725133},
    {-0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.1249450968725133},
    {0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.1249450968725133},
    {-0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.1249450968725133},
    {-0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.1249450968725133},
    {0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.1249450968725133},
    {0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.1249450968725133},
    {-0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.1249450968725133},
    {-0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.1249450968725133},
    {0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.1249450968725133},
    {-0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.1249450968725133},
    {0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.1249450968725133},
    {0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.1249450968725133},
    {-0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.1249450968725133},
    {0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.1249450968725133},
    {0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.1249450968725133},
    {-0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.1249450968725133},
    {-0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.1249450968725133},
    {0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.1249450968725133},
    {-0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.1249450968725133},
    {0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.12058024902852789},
    {-0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.12058024902852789},
    {0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.12058024902852789},
    {0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.12058024902852789},
    {-0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.12058024902852789},
    {-0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.12058024902852789},
    {0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.12058024902852789},
    {-0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.12058024902852789},
    {-0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.12058024902852789},
    {0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.12058024902852789},
    {0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.12058024902852789},
    {-0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.12058024902852789},
    {-0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.12058024902852789},
    {0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.12058024902852789},
    {-0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.12058024902852789},
    {0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.12058024902852789},
    {0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.12058024902852789},
    {-0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.12058024902852789},
    {0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.12058024902852789},
    {0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.12058024902852789},
    {-0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.12058024902852789},
    {-0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.12058024902852789},
    {0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.12058024902852789},
    {-0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.12058024902852789},
    {0.47836902881215021, 0.87815891060406615, 0, 0.12183091738552138},
    {-0.47836902881215021, 0.87815891060406615, 0, 0.12183091738552138},
    {0.47836902881215021, -0.87815891060406615, 0, 0.12183091738552138},
    {-0.47836902881215021, -0.87815891060406615, 0, 0.12183091738552138},
    {0.87815891060406615, 0.47836902881215021, 0, 0.12183091738552138},
    {-0.87815891060406615, 0.47836902881215021, 0, 0.12183091738552138},
    {0.87815891060406615, -0.47836902881215021, 0, 0.12183091738552138},
    {-0.87815891060406615, -0.47836902881215021, 0, 0.12183091738552138},
    {0.47836902881215021, 0, 0.87815891060406615, 0.12183091738552138},
    {-0.47836902881215021, 0, 0.87815891060406615, 0.12183091738552138},
    {0.47836902881215021, 0, -0.87815891060406615, 0.12183091738552138},
    {-0.47836902881215021, 0, -0.87815891060406615, 0.12183091738552138},
    {0.87815891060406615, 0, 0.47836902881215021, 0.12183091738552138},
    {-0.87815891060406615, 0, 0.47836902881215021, 0.12183091738552138},
    {0.87815891060406615, 0, -0.47836902881215021, 0.12183091738552138},
    {-0.87815891060406615, 0, -0.47836902881215021, 0.12183091738552138},
    {0, 0.47836902881215021, 0.87815891060406615, 0.12183091738552138},
    {0, -0.47836902881215021, 0.87815891060406615, 0.12183091738552138},
    {0, 0.47836902881215021, -0.87815891060406615, 0.12183091738552138},
    {0, -0.47836902881215021, -0.87815891060406615, 0.12183091738552138},
    {0, 0.87815891060406615, 0.47836902881215021, 0.12183091738552138},
    {0, -0.87815891060406615, 0.47836902881215021, 0.12183091738552138},
    {0, 0.87815891060406615, -0.47836902881215021, 0.12183091738552138},
    {0, -0.87815891060406615, -0.47836902881215021, 0.12183091738552138},
};

inline constexpr LebedevNode kLebedev590[590] = {
    {1, 0, 0, 0.0038894441293212969},
    {-1, 0, 0, 0.0038894441293212969},
    {0, 1, 0, 0.0038894441293212969},
    {0, -1, 0, 0.0038894441293212969},
    {0, 0, 1, 0.0038894441293212969},
    {0, 0, -1, 0.0038894441293212969},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.023277689811090987},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.023277689811090987},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.023277689811090987},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.023277689811090987},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.023277689811090987},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.023277689811090987},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.023277689811090987},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.023277689811090987},
    {0.70409549382274694, 0.70409549382274694, 0.092190407076898254, 0.023521614885652412},
    {-0.70409549382274694, 0.70409549382274694, 0.092190407076898254, 0.023521614885652412},
    {0.70409549382274694, -0.70409549382274694, 0.092190407076898254, 0.023521614885652412},
    {0.70409549382274694, 0.70409549382274694, -0.092190407076898254, 0.023521614885652412},
    {-0.70409549382274694, -0.70409549382274694, 0.092190407076898254, 0.023521614885652412},
    {-0.70409549382274694, 0.70409549382274694, -0.092190407076898254, 0.023521614885652412},
    {0.70409549382274694, -0.70409549382274694, -0.092190407076898254, 0.023521614885652412},
    {-0.70409549382274694, -0.70409549382274694, -0.092190407076898254, 0.023521614885652412},
    {-0.70409549382274694, 0.092190407076898254, 0.70409549382274694, 0.023521614885652412},
    {0.70409549382274694, -0.092190407076898254, 0.70409549382274694, 0.023521614885652412},
    {0.70409549382274694, 0.092190407076898254, -0.70409549382274694, 0.023521614885652412},
    {-0.70409549382274694, -0.092190407076898254, 0.70409549382274694, 0.023521614885652412},
    {-0.70409549382274694, 0.092190407076898254, -0.70409549382274694, 0.023521614885652412},
    {0.70409549382274694, -0.092190407076898254, -0.70409549382274694, 0.023521614885652412},
    {-0.70409549382274694, -0.092190407076898254, -0.70409549382274694, 0.023521614885652412},
    {0.70409549382274694, 0.092190407076898254, 0.70409549382274694, 0.023521614885652412},
    {0.092190407076898254, 0.70409549382274694, 0.70409549382274694, 0.023521614885652412},
    {-0.092190407076898254, 0.70409549382274694, 0.70409549382274694, 0.023521614885652412},
    {0.092190407076898254, -0.70409549382274694, 0.70409549382274694, 0.023521614885652412},
    {0.092190407076898254, 0.70409549382274694, -0.70409549382274694, 0.023521614885652412},
    {-0.092190407076898254, -0.70409549382274694, 0.70409549382274694, 0.023521614885652412},
    {-0.092190407076898254, 0.70409549382274694, -0.70409549382274694, 0.023521614885652412},
    {0.092190407076898254, -0.70409549382274694, -0.70409549382274694, 0.023521614885652412},
    {-0.092190407076898254, -0.70409549382274694, -0.70409549382274694, 0.023521614885652412},
    {0.68077440664552435, 0.68077440664552435, 0.2703560883591648, 0.023358527851253065},
    {-0.68077440664552435, 0.68077440664552435, 0.2703560883591648, 0.023358527851253065},
    {0.68077440664552435, -0.68077440664552435, 0.2703560883591648, 0.023358527851253065},
    {0.68077440664552435, 0.68077440664552435, -0.2703560883591648, 0.023358527851253065},
    {-0.68077440664552435, -0.68077440664552435, 0.2703560883591648, 0.023358527851253065},
    {-0.68077440664552435, 0.68077440664552435, -0.2703560883591648, 0.023358527851253065},
    {0.68077440664552435, -0.68077440664552435, -0.2703560883591648, 0.023358527851253065},
    {-0.68077440664552435, -0.68077440664552435, -0.2703560883591648, 0.023358527851253065},
    {-0.68077440664552435, 0.2703560883591648, 0.68077440664552435, 0.023358527851253065},
    {0.68077440664552435, -0.2703560883591648, 0.68077440664552435, 0.023358527851253065},
    {0.68077440664552435, 0.2703560883591648, -0.68077440664552435, 0.023358527851253065},
    {-0.68077440664552435, -0.2703560883591648, 0.68077440664552435, 0.023358527851253065},
    {-0.68077440664552435, 0.2703560883591648, -0.68077440664552435, 0.023358527851253065},
    {0.68077440664552435, -0.2703560883591648, -0.68077440664552435, 0.023358527851253065},
    {-0.68077440664552435, -0.2703560883591648, -0.68077440664552435, 0.023358527851253065},
    {0.68077440664552435, 0.2703560883591648, 0.68077440664552435, 0.023358527851253065},
    {0.2703560883591648, 0.68077440664552435, 0.68077440664552435, 0.023358527851253065},
    {-0.2703560883591648, 0.68077440664552435, 0.68077440664552435, 0.023358527851253065},
    {0.2703560883591648, -0.68077440664552435, 0.68077440664552435, 0.023358527851253065},
    {0.2703560883591648, 0.68077440664552435, -0.68077440664552435, 0.023358527851253065},
    {-0.2703560883591648, -0.68077440664552435, 0.68077440664552435, 0.023358527851253065},
    {-0.2703560883591648, 0.68077440664552435, -0.68077440664552435, 0.023358527851253065},
    {0.2703560883591648, -0.68077440664552435, -0.68077440664552435, 0.023358527851253065},
    {-0.2703560883591648, -0.68077440664552435, -0.68077440664552435, 0.023358527851253065},
    {0.63725469392587519, 0.63725469392587519, 0.43337386877715439, 0.023273280644847582},
    {-0.63725469392587519, 0.63725469392587519, 0.43337386877715439, 0.023273280644847582},
    {0.63725469392587519, -0.63725469392587519, 0.43337386877715439, 0.023273280644847582},
    {0.63725469392587519, 0.63725469392587519, -0.43337386877715439, 0.023273280644847582},
    {-0.63725469392587519, -0.63725469392587519, 0.43337386877715439, 0.023273280644847582},
    {-0.63725469392587519, 0.63725469392587519, -0.43337386877715439, 0.023273280644847582},
    {0.63725469392587519, -0.63725469392587519, -0.43337386877715439, 0.023273280644847582},
    {-0.63725469392587519, -0.63725469392587519, -0.43337386877715439, 0.023273280644847582},
    {-0.63725469392587519, 0.43337386877715439, 0.63725469392587519, 0.023273280644847582},
    {0.63725469392587519, -0.43337386877715439, 0.63725469392587519, 0.023273280644847582},
    {0.63725469392587519, 0.43337386877715439, -0.63725469392587519, 0.023273280644847582},
    {-0.63725469392587519, -0.43337386877715439, 0.63725469392587519, 0.023273280644847582},
    {-0.63725469392587519, 0.43337386877715439, -0.63725469392587519, 0.023273280644847582},
    {0.63725469392587519, -0.43337386877715439, -0.63725469392587519, 0.023273280644847582},
    {-0.63725469392587519, -0.43337386877715439, -0.63725469392587519, 0.023273280644847582},
    {0.63725469392587519, 0.43337386877715439, 0.63725469392587519, 0.023273280644847582},
    {0.43337386877715439, 0.63725469392587519, 0.63725469392587519, 0.023273280644847582},
    {-0.43337386877715439, 0.63725469392587519, 0.63725469392587519, 0.023273280644847582},
    {0.43337386877715439, -0.63725469392587519, 0.63725469392587519, 0.023273280644847582},
    {0.43337386877715439, 0.63725469392587519, -0.63725469392587519, 0.023273280644847582},
    {-0.43337386877715439, -0.63725469392587519, 0.63725469392587519, 0.023273280644847582},
    {-0.43337386877715439, 0.63725469392587519, -0.63725469392587519, 0.023273280644847582},
    {0.43337386877715439, -0.63725469392587519, -0.63725469392587519, 0.023273280644847582},
    {-0.43337386877715439, -0.63725469392587519, -0.63725469392587519, 0.023273280644847582},
    {0.50444197078003583, 0.50444197078003583, 0.70076857537357296, 0.023206517124447171},
    {-0.50444197078003583, 0.50444197078003583, 0.70076857537357296, 0.023206517124447171},
    {0.50444197078003583, -0.50444197078003583, 0.70076857537357296, 0.023206517124447171},
    {0.50444197078003583, 0.50444197078003583, -0.70076857537357296, 0.023206517124447171},
    {-0.50444197078003583, -0.50444197078003583, 0.70076857537357296, 0.023206517124447171},
    {-0.50444197078003583, 0.50444197078003583, -0.70076857537357296, 0.023206517124447171},
    {0.50444197078003583, -0.50444197078003583, -0.70076857537357296, 0.023206517124447171},
    {-0.50444197078003583, -0.50444197078003583, -0.70076857537357296, 0.023206517124447171},
    {-0.50444197078003583, 0.70076857537357296, 0.50444197078003583, 0.023206517124447171},
    {0.50444197078003583, -0.70076857537357296, 0.50444197078003583, 0.023206517124447171},
    {0.50444197078003583, 0.70076857537357296, -0.50444197078003583, 0.023206517124447171},
    {-0.50444197078003583, -0.70076857537357296, 0.50444197078003583, 0.023206517124447171},
    {-0.50444197078003583, 0.70076857537357296, -0.50444197078003583, 0.023206517124447171},
    {0.50444197078003583, -0.70076857537357296, -0.50444197078003583, 0.023206517124447171},
    {-0.50444197078003583, -0.70076857537357296, -0.50444197078003583, 0.023206517124447171},
    {0.50444197078003583, 0.70076857537357296, 0.50444197078003583, 0.023206517124447171},
    {0.70076857537357296, 0.50444197078003583, 0.50444197078003583, 0.023206517124447171},
    {-0.70076857537357296, 0.50444197078003583, 0.50444197078003583, 0.023206517124447171},
    {0.70076857537357296, -0.50444197078003583, 0.50444197078003583, 0.023206517124447171},
    {0.70076857537357296, 0.50444197078003583, -0.50444197078003583, 0.023206517124447171},
    {-0.70076857537357296, -0.50444197078003583, 0.50444197078003583, 0.023206517124447171},
    {-0.70076857537357296, 0.50444197078003583, -0.50444197078003583, 0.023206517124447171},
    {0.70076857537357296, -0.50444197078003583, -0.50444197078003583, 0.023206517124447171},
    {-0.70076857537357296, -0.50444197078003583, -0.50444197078003583, 0.023206517124447171},
    {0.42157617840109668, 0.42157617840109668, 0.80283687733527376, 0.02285159031614609},
    {-0.42157617840109668, 0.42157617840109668, 0.80283687733527376, 0.02285159031614609},
    {0.42157617840109668, -0.42157617840109668, 0.80283687733527376, 0.02285159031614609},
    {0.42157617840109668, 0.42157617840109668, -0.80283687733527376, 0.02285159031614609},
    {-0.42157617840109668, -0.42157617840109668, 0.80283687733527376, 0.02285159031614609},
    {-0.42157617840109668, 0.42157617840109668, -0.80283687733527376, 0.02285159031614609},
    {0.42157617840109668, -0.42157617840109668, -0.80283687733527376, 0.02285159031614609},
    {-0.42157617840109668, -0.42157617840109668, -0.80283687733527376, 0.02285159031614609},
    {-0.42157617840109668, 0.80283687733527376, 0.42157617840109668, 0.02285159031614609},
    {0.42157617840109668, -0.80283687733527376, 0.42157617840109668, 0.02285159031614609},
    {0.42157617840109668, 0.80283687733527376, -0.42157617840109668, 0.02285159031614609},
    {-0.42157617840109668, -0.80283687733527376, 0.42157617840109668, 0.02285159031614609},
    {-0.42157617840109668, 0.80283687733527376, -0.42157617840109668, 0.02285159031614609},
    {0.42157617840109668, -0.80283687733527376, -0.42157617840109668, 0.02285159031614609},
    {-0.42157617840109668, -0.80283687733527376, -0.42157617840109668, 0.02285159031614609},
    {0.42157617840109668, 0.80283687733527376, 0.42157617840109668, 0.02285159031614609},
    {0.80283687733527376, 0.42157617840109668, 0.42157617840109668, 0.02285159031614609},
    {-0.80283687733527376, 0.42157617840109668, 0.42157617840109668, 0.02285159031614609},
    {0.80283687733527376, -0.42157617840109668, 0.42157617840109668, 0.02285159031614609},
    {0.80283687733527376, 0.42157617840109668, -0.42157617840109668, 0.02285159031614609},
    {-0.80283687733527376, -0.42157617840109668, 0.42157617840109668, 0.02285159031614609},
    {-0.80283687733527376, 0.42157617840109668, -0.42157617840109668, 0.02285159031614609},
    {0.80283687733527376, -0.42157617840109668, -0.42157617840109668, 0.02285159031614609},
    {-0.80283687733527376, -0.42157617840109668, -0.42157617840109668, 0.02285159031614609},
    {0.3317920736472123, 0.3317920736472123, 0.88307872793413256, 0.02198567789717927},
    {-0.3317920736472123, 0.3317920736472123, 0.88307872793413256, 0.02198567789717927},
    {0.3317920736472123, -0.3317920736472123, 0.88307872793413256, 0.02198567789717927},
    {0.3317920736472123, 0.3317920736472123, -0.88307872793413256, 0.02198567789717927},
    {-0.3317920736472123, -0.3317920736472123, 0.88307872793413256, 0.02198567789717927},
    {-0.3317920736472123, 0.3317920736472123, -0.88307872793413256, 0.02198567789717927},
    {0.3317920736472123, -0.3317920736472123, -0.88307872793413256, 0.02198567789717927},
    {-0.3317920736472123, -0.3317920736472123, -0.88307872793413256, 0.02198567789717927},
    {-0.3317920736472123, 0.88307872793413256, 0.3317920736472123, 0.02198567789717927},
    {0.3317920736472123, -0.88307872793413256, 0.3317920736472123, 0.02198567789717927},
    {0.3317920736472123, 0.88307872793413256, -0.3317920736472123, 0.02198567789717927},
    {-0.3317920736472123, -0.88307872793413256, 0.3317920736472123, 0.02198567789717927},
    {-0.3317920736472123, 0.88307872793413256, -0.3317920736472123, 0.02198567789717927},
    {0.3317920736472123, -0.88307872793413256, -0.3317920736472123, 0.02198567789717927},
    {-0.3317920736472123, -0.88307872793413256, -0.3317920736472123, 0.02198567789717927},
    {0.3317920736472123, 0.88307872793413256, 0.3317920736472123, 0.02198567789717927},
    {0.88307872793413256, 0.3317920736472123, 0.3317920736472123, 0.02198567789717927},
    {-0.88307872793413256, 0.3317920736472123, 0.3317920736472123, 0.02198567789717927},
    {0.88307872793413256, -0.3317920736472123, 0.3317920736472123, 0.02198567789717927},
    {0.88307872793413256, 0.3317920736472123, -0.3317920736472123, 0.02198567789717927},
    {-0.88307872793413256, -0.3317920736472123, 0.3317920736472123, 0.02198567789717927},
    {-0.88307872793413256, 0.3317920736472123, -0.3317920736472123, 0.02198567789717927},
    {0.88307872793413256, -0.3317920736472123, -0.3317920736472123, 0.02198567789717927},
    {-0.88307872793413256, -0.3317920736472123, -0.3317920736472123, 0.02198567789717927},
    {0.2384736701421887, 0.2384736701421887, 0.94141415822040253, 0.020322468354886609},
    {-0.2384736701421887, 0.2384736701421887, 0.94141415822040253, 0.020322468354886609},
    {0.2384736701421887, -0.2384736701421887, 0.94141415822040253, 0.020322468354886609},
    {0.2384736701421887, 0.2384736701421887, -0.94141415822040253, 0.020322468354886609},
    {-0.2384736701421887, -0.2384736701421887, 0.94141415822040253, 0.020322468354886609},
    {-0.2384736701421887, 0.2384736701421887, -0.94141415822040253, 0.020322468354886609},
    {0.2384736701421887, -0.2384736701421887, -0.94141415822040253, 0.020322468354886609},
    {-0.2384736701421887, -0.2384736701421887, -0.94141415822040253, 0.020322468354886609},
    {-0.2384736701421887, 0.94141415822040253, 0.2384736701421887, 0.020322468354886609},
    {0.2384736701421887, -0.94141415822040253, 0.2384736701421887, 0.020322468354886609},
    {0.2384736701421887, 0.94141415822040253, -0.2384736701421887, 0.020322468354886609},
    {-0.2384736701421887, -0.94141415822040253, 0.2384736701421887, 0.020322468354886609},
    {-0.2384736701421887, 0.94141415822040253, -0.2384736701421887, 0.020322468354886609},
    {0.2384736701421887, -0.94141415822040253, -0.2384736701421887, 0.020322468354886609},
    {-0.2384736701421887, -0.94141415822040253, -0.2384736701421887, 0.020322468354886609},
    {0.2384736701421887, 0.94141415822040253, 0.2384736701421887, 0.020322468354886609},
    {0.94141415822040253, 0.2384736701421887, 0.2384736701421887, 0.020322468354886609},
    {-0.94141415822040253, 0.2384736701421887, 0.2384736701421887, 0.020322468354886609},
    {0.94141415822040253, -0.2384736701421887, 0.2384736701421887, 0.020322468354886609},
    {0.94141415822040253, 0.2384736701421887, -0.2384736701421887, 0.020322468354886609},
    {-0.94141415822040253, -0.2384736701421887, 0.2384736701421887, 0.020322468354886609},
    {-0.94141415822040253, 0.2384736701421887, -0.2384736701421887, 0.020322468354886609},
    {0.94141415822040253, -0.2384736701421887, -0.2384736701421887, 0.020322468354886609},
    {-0.94141415822040253, -0.2384736701421887, -0.2384736701421887, 0.020322468354886609},
    {0.14590364491577629, 0.14590364491577629, 0.97848058376269387, 0.017401121296649277},
    {-0.14590364491577629, 0.14590364491577629, 0.97848058376269387, 0.017401121296649277},
    {0.14590364491577629, -0.14590364491577629, 0.97848058376269387, 0.017401121296649277},
    {0.14590364491577629, 0.14590364491577629, -0.97848058376269387, 0.017401121296649277},
    {-0.14590364491577629, -0.14590364491577629, 0.97848058376269387, 0.017401121296649277},
    {-0.14590364491577629, 0.14590364491577629, -0.97848058376269387, 0.017401121296649277},
    {0.14590364491577629, -0.14590364491577629, -0.97848058376269387, 0.017401121296649277},
    {-0.14590364491577629, -0.14590364491577629, -0.97848058376269387, 0.017401121296649277},
    {-0.14590364491577629, 0.97848058376269387, 0.14590364491577629, 0.017401121296649277},
    {0.14590364491577629, -0.97848058376269387, 0.14590364491577629, 0.017401121296649277},
    {0.14590364491577629, 0.97848058376269387, -0.14590364491577629, 0.017401121296649277},
    {-0.14590364491577629, -0.97848058376269387, 0.14590364491577629, 0.017401121296649277},
    {-0.14590364491577629, 0.97848058376269387, -0.14590364491577629, 0.017401121296649277},
    {0.14590364491577629, -0.97848058376269387, -0.14590364491577629, 0.017401121296649277},
    {-0.14590364491577629, -0.97848058376269387, -0.14590364491577629, 0.017401121296649277},
    {0.14590364491577629, 0.97848058376269387, 0.14590364491577629, 0.017401121296649277},
    {0.97848058376269387, 0.14590364491577629, 0.14590364491577629, 0.017401121296649277},
    {-0.97848058376269387, 0.14590364491577629, 0.14590364491577629, 0.017401121296649277},
    {0.97848058376269387, -0.14590364491577629, 0.14590364491577629, 0.017401121296649277},
    {0.97848058376269387, 0.14590364491577629, -0.14590364491577629, 0.017401121296649277},
    {-0.97848058376269387, -0.14590364491577629, 0.14590364491577629, 0.017401121296649277},
    {-0.97848058376269387, 0.14590364491577629, -0.14590364491577629, 0.017401121296649277},
    {0.97848058376269387, -0.14590364491577629, -0.14590364491577629, 0.017401121296649277},
    {-0.97848058376269387, -0.14590364491577629, -0.14590364491577629, 0.017401121296649277},
    {0.06095034115507196, 0.06095034115507196, 0.99627812975401642, 0.012270220422136898},
    {-0.06095034115507196, 0.06095034115507196, 0.99627812975401642, 0.012270220422136898},
    {0.06095034115507196, -0.06095034115507196, 0.99627812975401642, 0.012270220422136898},
    {0.06095034115507196, 0.06095034115507196, -0.99627812975401642, 0.012270220422136898},
    {-0.06095034115507196, -0.06095034115507196, 0.99627812975401642, 0.012270220422136898},
    {-0.06095034115507196, 0.06095034115507196, -0.99627812975401642, 0.012270220422136898},
    {0.06095034115507196, -0.06095034115507196, -0.99627812975401642, 0.012270220422136898},
    {-0.06095034115507196, -0.06095034115507196, -0.99627812975401642, 0.012270220422136898},
    {-0.06095034115507196, 0.99627812975401642, 0.06095034115507196, 0.012270220422136898},
    {0.06095034115507196, -0.99627812975401642, 0.06095034115507196, 0.012270220422136898},
    {0.06095034115507196, 0.99627812975401642, -0.06095034115507196, 0.012270220422136898},
    {-0.06095034115507196, -0.99627812975401642, 0.06095034115507196, 0.012270220422136898},
    {-0.06095034115507196, 0.99627812975401642, -0.06095034115507196, 0.012270220422136898},
    {0.06095034115507196, -0.99627812975401642, -0.06095034115507196, 0.012270220422136898},
    {-0.06095034115507196, -0.99627812975401642, -0.06095034115507196, 0.012270220422136898},
    {0.06095034115507196, 0.99627812975401642, 0.06095034115507196, 0.012270220422136898},
    {0.99627812975401642, 0.06095034115507196, 0.06095034115507196, 0.012270220422136898},
    {-0.99627812975401642, 0.06095034115507196, 0.06095034115507196, 0.012270220422136898},
    {0.99627812975401642, -0.06095034115507196, 0.06095034115507196, 0.012270220422136898},
    {0.99627812975401642, 0.06095034115507196, -0.06095034115507196, 0.012270220422136898},
    {-0.99627812975401642, -0.06095034115507196, 0.06095034115507196, 0.012270220422136898},
    {-0.99627812975401642, 0.06095034115507196, -0.06095034115507196, 0.012270220422136898},
    {0.99627812975401642, -0.06095034115507196, -0.06095034115507196, 0.012270220422136898},
    {-0.99627812975401642, -0.06095034115507196, -0.06095034115507196, 0.012270220422136898},
    {0.61168434420098761, 0.79110192962690196, 0, 0.023337775889269885},
    {-0.61168434420098761, 0.79110192962690196, 0, 0.023337775889269885},
    {0.61168434420098761, -0.79110192962690196, 0, 0.023337775889269885},
    {-0.61168434420098761, -0.79110192962690196, 0, 0.023337775889269885},
    {0.79110192962690196, 0.61168434420098761, 0, 0.023337775889269885},
    {-0.79110192962690196, 0.61168434420098761, 0, 0.023337775889269885},
    {0.79110192962690196, -0.61168434420098761, 0, 0.023337775889269885},
    {-0.79110192962690196, -0.61168434420098761, 0, 0.023337775889269885},
    {0.61168434420098761, 0, 0.79110192962690196, 0.023337775889269885},
    {-0.61168434420098761, 0, 0.79110192962690196, 0.023337775889269885},
    {0.61168434420098761, 0, -0.79110192962690196, 0.023337775889269885},
    {-0.61168434420098761, 0, -0.79110192962690196, 0.023337775889269885},
    {0.79110192962690196, 0, 0.61168434420098761, 0.023337775889269885},
    {-0.79110192962690196, 0, 0.61168434420098761, 0.023337775889269885},
    {0.79110192962690196, 0, -0.61168434420098761, 0.023337775889269885},
    {-0.79110192962690196, 0, -0.61168434420098761, 0.023337775889269885},
    {0, 0.61168434420098761, 0.79110192962690196, 0.023337775889269885},
    {0, -0.61168434420098761, 0.79110192962690196, 0.023337775889269885},
    {0, 0.61168434420098761, -0.79110192962690196, 0.023337775889269885},
    {0, -0.61168434420098761, -0.79110192962690196, 0.023337775889269885},
    {0, 0.79110192962690196, 0.61168434420098761, 0.023337775889269885},
    {0, -0.79110192962690196, 0.61168434420098761, 0.023337775889269885},
    {0, 0.79110192962690196, -0.61168434420098761, 0.023337775889269885},
    {0, -0.79110192962690196, -0.61168434420098761, 0.023337775889269885},
    {0.39647553481998582, 0.91804528771145399, 0, 0.021427597073266094},
    {-0.39647553481998582, 0.91804528771145399, 0, 0.021427597073266094},
    {0.39647553481998582, -0.91804528771145399, 0, 0.021427597073266094},
    {-0.39647553481998582, -0.91804528771145399, 0, 0.021427597073266094},
    {0.91804528771145399, 0.39647553481998582, 0, 0.021427597073266094},
    {-0.91804528771145399, 0.39647553481998582, 0, 0.021427597073266094},
    {0.91804528771145399, -0.39647553481998582, 0, 0.021427597073266094},
    {-0.91804528771145399, -0.39647553481998582, 0, 0.021427597073266094},
    {0.39647553481998582, 0, 0.91804528771145399, 0.021427597073266094},
    {-0.39647553481998582, 0, 0.91804528771145399, 0.021427597073266094},
    {0.39647553481998582, 0, -0.91804528771145399, 0.021427597073266094},
    {-0.39647553481998582, 0, -0.91804528771145399, 0.021427597073266094},
    {0.91804528771145399, 0, 0.39647553481998582, 0.021427597073266094},
    {-0.91804528771145399, 0, 0.39647553481998582, 0.021427597073266094},
    {0.91804528771145399, 0, -0.39647553481998582, 0.021427597073266094},
    {-0.91804528771145399, 0, -0.39647553481998582, 0.021427597073266094},
    {0, 0.39647553481998582, 0.91804528771145399, 0.021427597073266094},
    {0, -0.39647553481998582, 0.91804528771145399, 0.021427597073266094},
    {0, 0.39647553481998582, -0.91804528771145399, 0.021427597073266094},
    {0, -0.39647553481998582, -0.91804528771145399, 0.021427597073266094},
    {0, 0.91804528771145399, 0.39647553481998582, 0.021427597073266094},
    {0, -0.91804528771145399, 0.39647553481998582, 0.021427597073266094},
    {0, 0.91804528771145399, -0.39647553481998582, 0.021427597073266094},
    {0, -0.91804528771145399, -0.39647553481998582, 0.021427597073266094},
    {0.17247820099077241, 0.98501333502800192, 0, 0.016340324222732412},
    {-0.17247820099077241, 0.98501333502800192, 0, 0.016340324222732412},
    {0.17247820099077241, -0.98501333502800192, 0, 0.016340324222732412},
    {-0.17247820099077241, -0.98501333502800192, 0, 0.016340324222732412},
    {0.98501333502800192, 0.17247820099077241, 0, 0.016340324222732412},
    {-0.98501333502800192, 0.17247820099077241, 0, 0.016340324222732412},
    {0.98501333502800192, -0.17247820099077241, 0, 0.016340324222732412},
    {-0.98501333502800192, -0.17247820099077241, 0, 0.016340324222732412},
    {0.17247820099077241, 0, 0.98501333502800192, 0.016340324222732412},
    {-0.17247820099077241, 0, 0.98501333502800192, 0.016340324222732412},
    {0.17247820099077241, 0, -0.98501333502800192, 0.016340324222732412},
    {-0.17247820099077241, 0, -0.98501333502800192, 0.016340324222732412},
    {0.98501333502800192, 0, 0.17247820099077241, 0.016340324222732412},
    {-0.98501333502800192, 0, 0.17247820099077241, 0.016340324222732412},
    {0.98501333502800192, 0, -0.17247820099077241, 0.016340324222732412},
    {-0.98501333502800192, 0, -0.17247820099077241, 0.016340324222732412},
    {0, 0.17247820099077241, 0.98501333502800192, 0.016340324222732412},
    {0, -0.17247820099077241, 0.98501333502800192, 0.016340324222732412},
    {0, 0.17247820099077241, -0.98501333502800192, 0.016340324222732412},
    {0, -0.17247820099077241, -0.98501333502800192, 0.016340324222732412},
    {0, 0.98501333502800192, 0.17247820099077241, 0.016340324222732412},
    {0, -0.98501333502800192, 0.17247820099077241, 0.016340324222732412},
    {0, 0.98501333502800192, -0.17247820099077241, 0.016340324222732412},
    {0, -0.98501333502800192, -0.17247820099077241, 0.016340324222732412},
    {0.56102638086220602, 0.35182809277335192, 0.74931061190411585, 0.02315814309130472},
    {-0.56102638086220602, 0.35182809277335192, 0.74931061190411585, 0.02315814309130472},
    {0.56102638086220602, -0.35182809277335192, 0.74931061190411585, 0.02315814309130472},
    {0.56102638086220602, 0.35182809277335192, -0.74931061190411585, 0.02315814309130472},
    {-0.56102638086220602, -0.35182809277335192, 0.74931061190411585, 0.02315814309130472},
    {0.56102638086220602, -0.35182809277335192, -0.74931061190411585, 0.02315814309130472},
    {-0.56102638086220602, 0.35182809277335192, -0.74931061190411585, 0.02315814309130472},
    {-0.56102638086220602, -0.35182809277335192, -0.74931061190411585, 0.02315814309130472},
    {0.35182809277335192, 0.56102638086220602, 0.74931061190411585, 0.02315814309130472},
    {-0.35182809277335192, 0.56102638086220602, 0.74931061190411585, 0.02315814309130472},
    {0.35182809277335192, -0.56102638086220602, 0.74931061190411585, 0.02315814309130472},
    {0.35182809277335192, 0.56102638086220602, -0.74931061190411585, 0.02315814309130472},
    {-0.35182809277335192, -0.56102638086220602, 0.74931061190411585, 0.02315814309130472},
    {0.35182809277335192, -0.56102638086220602, -0.74931061190411585, 0.02315814309130472},
    {-0.35182809277335192, 0.56102638086220602, -0.74931061190411585, 0.02315814309130472},
    {-0.35182809277335192, -0.56102638086220602, -0.74931061190411585, 0.02315814309130472},
    {0.74931061190411585, 0.56102638086220602, 0.35182809277335192, 0.02315814309130472},
    {-0.74931061190411585, 0.56102638086220602, 0.35182809277335192, 0.02315814309130472},
    {0.74931061190411585, -0.56102638086220602, 0.35182809277335192, 0.02315814309130472},
    {0.74931061190411585, 0.56102638086220602, -0.35182809277335192, 0.02315814309130472},
    {-0.74931061190411585, -0.56102638086220602, 0.35182809277335192, 0.02315814309130472},
    {0.74931061190411585, -0.56102638086220602, -0.35182809277335192, 0.02315814309130472},
    {-0.74931061190411585, 0.56102638086220602, -0.35182809277335192, 0.02315814309130472},
    {-0.74931061190411585, -0.56102638086220602, -0.35182809277335192, 0.02315814309130472},
    {0.74931061190411585, 0.35182809277335192, 0.56102638086220602, 0.02315814309130472},
    {-0.74931061190411585, 0.35182809277335192, 0.56102638086220602, 0.02315814309130472},
    {0.74931061190411585, -0.35182809277335192, 0.56102638086220602, 0.02315814309130472},
    {0.74931061190411585, 0.35182809277335192, -0.56102638086220602, 0.02315814309130472},
    {-0.74931061190411585, -0.35182809277335192, 0.56102638086220602, 0.02315814309130472},
    {0.74931061190411585, -0.35182809277335192, -0.56102638086220602, 0.02315814309130472},
    {-0.74931061190411585, 0.35182809277335192, -0.56102638086220602, 0.02315814309130472},
    {-0.74931061190411585, -0.35182809277335192, -0.56102638086220602, 0.02315814309130472},
    {0.56102638086220602, 0.74931061190411585, 0.35182809277335192, 0.02315814309130472},
    {-0.56102638086220602, 0.74931061190411585, 0.35182809277335192, 0.02315814309130472},
    {0.56102638086220602, -0.74931061190411585, 0.35182809277335192, 0.02315814309130472},
    {0.56102638086220602, 0.74931061190411585, -0.35182809277335192, 0.02315814309130472},
    {-0.56102638086220602, -0.74931061190411585, 0.35182809277335192, 0.02315814309130472},
    {0.56102638086220602, -0.74931061190411585, -0.35182809277335192, 0.02315814309130472},
    {-0.56102638086220602, 0.74931061190411585, -0.35182809277335192, 0.02315814309130472},
    {-0.56102638086220602, -0.74931061190411585, -0.35182809277335192, 0.02315814309130472},
    {0.35182809277335192, 0.74931061190411585, 0.56102638086220602, 0.02315814309130472},
    {-0.35182809277335192, 0.74931061190411585, 0.56102638086220602, 0.02315814309130472},
    {0.35182809277335192, -0.74931061190411585, 0.56102638086220602, 0.02315814309130472},
    {0.35182809277335192, 0.74931061190411585, -0.56102638086220602, 0.02315814309130472},
    {-0.35182809277335192, -0.74931061190411585, 0.56102638086220602, 0.02315814309130472},
    {0.35182809277335192, -0.74931061190411585, -0.56102638086220602, 0.02315814309130472},
    {-0.35182809277335192, 0.74931061190411585, -0.56102638086220602, 0.02315814309130472},
    {-0.35182809277335192, -0.74931061190411585, -0.56102638086220602, 0.02315814309130472},
    {0.47423928425519801, 0.26347166559379498, 0.84004748835905041, 0.02265288026067282},
    {-0.47423928425519801, 0.26347166559379498, 0.84004748835905041, 0.02265288026067282},
    {0.47423928425519801, -0.26347166559379498, 0.84004748835905041, 0.02265288026067282},
    {0.47423928425519801, 0.26347166559379498, -0.84004748835905041, 0.02265288026067282},
    {-0.47423928425519801, -0.26347166559379498, 0.84004748835905041, 0.02265288026067282},
    {0.47423928425519801, -0.26347166559379498, -0.84004748835905041, 0.02265288026067282},
    {-0.47423928425519801, 0.26347166559379498, -0.84004748835905041, 0.02265288026067282},
    {-0.47423928425519801, -0.26347166559379498, -0.84004748835905041, 0.02265288026067282},
    {0.26347166559379498, 0.47423928425519801, 0.84004748835905041, 0.02265288026067282},
    {-0.26347166559379498, 0.47423928425519801, 0.84004748835905041, 0.02265288026067282},
    {0.26347166559379498, -0.47423928425519801, 0.84004748835905041, 0.02265288026067282},
    {0.26347166559379498, 0.47423928425519801, -0.84004748835905041, 0.02265288026067282},
    {-0.26347166559379498, -0.47423928425519801, 0.84004748835905041, 0.02265288026067282},
    {0.26347166559379498, -0.47423928425519801, -0.84004748835905041, 0.02265288026067282},
    {-0.26347166559379498, 0.47423928425519801, -0.84004748835905041, 0.02265288026067282},
    {-0.26347166559379498, -0.47423928425519801, -0.84004748835905041, 0.02265288026067282},
    {0.84004748835905041, 0.47423928425519801, 0.26347166559379498, 0.02265288026067282},
    {-0.84004748835905041, 0.47423928425519801, 0.26347166559379498, 0.02265288026067282},
    {0.84004748835905041, -0.47423928425519801, 0.26347166559379498, 0.02265288026067282},
    {0.84004748835905041, 0.47423928425519801, -0.26347166559379498, 0.02265288026067282},
    {-0.84004748835905041, -0.47423928425519801, 0.26347166559379498, 0.02265288026067282},
    {0.84004748835905041, -0.47423928425519801, -0.26347166559379498, 0.02265288026067282},
    {-0.84004748835905041, 0.47423928425519801, -0.26347166559379498, 0.02265288026067282},
    {-0.84004748835905041, -0.47423928425519801, -0.26347166559379498, 0.02265288026067282},
    {0.84004748835905041, 0.26347166559379498, 0.47423928425519801, 0.02265288026067282},
    {-0.84004748835905041, 0.26347166559379498, 0.47423928425519801, 0.02265288026067282},
    {0.84004748835905041, -0.26347166559379498, 0.47423928425519801, 0.02265288026067282},
    {0.84004748835905041, 0.26347166559379498, -0.47423928425519801, 0.02265288026067282},
    {-0.84004748835905041, -0.26347166559379498, 0.47423928425519801, 0.02265288026067282},
    {0.84004748835905041, -0.26347166559379498, -0.47423928425519801, 0.02265288026067282},
    {-0.84004748835905041, 0.26347166559379498, -0.47423928425519801, 0.02265288026067282},
    {-0.84004748835905041, -0.26347166559379498, -0.47423928425519801, 0.02265288026067282},
    {0.47423928425519801, 0.84004748835905041, 0.26347166559379498, 0.02265288026067282},
    {-0.47423928425519801, 0.84004748835905041, 0.26347166559379498, 0.02265288026067282},
    {0.47423928425519801, -0.84004748835905041, 0.26347166559379498, 0.02265288026067282},
    {0.47423928425519801, 0.84004748835905041, -0.26347166559379498, 0.02265288026067282},
    {-0.47423928425519801, -0.84004748835905041, 0.26347166559379498, 0.02265288026067282},
    {0.47423928425519801, -0.84004748835905041, -0.26347166559379498, 0.02265288026067282},
    {-0.47423928425519801, 0.84004748835905041, -0.26347166559379498, 0.02265288026067282},
    {-0.47423928425519801, -0.84004748835905041, -0.26347166559379498, 0.02265288026067282},
    {0.26347166559379498, 0.84004748835905041, 0.47423928425519801, 0.02265288026067282},
    {-0.26347166559379498, 0.84004748835905041, 0.47423928425519801, 0.02265288026067282},
    {0.26347166559379498, -0.84004748835905041, 0.47423928425519801, 0.02265288026067282},
    {0.26347166559379498, 0.84004748835905041, -0.47423928425519801, 0.02265288026067282},
    {-0.26347166559379498, -0.84004748835905041, 0.47423928425519801, 0.02265288026067282},
    {0.26347166559379498, -0.84004748835905041, -0.47423928425519801, 0.02265288026067282},
    {-0.26347166559379498, 0.84004748835905041, -0.47423928425519801, 0.02265288026067282},
    {-0.26347166559379498, -0.84004748835905041, -0.47423928425519801, 0.02265288026067282},
    {0.59841264978853803, 0.18166408403602091, 0.78032074247992034, 0.023245656396302768},
    {-0.59841264978853803, 0.18166408403602091, 0.78032074247992034, 0.023245656396302768},
    {0.59841264978853803, -0.18166408403602091, 0.78032074247992034, 0.023245656396302768},
    {0.59841264978853803, 0.18166408403602091, -0.78032074247992034, 0.023245656396302768},
    {-0.59841264978853803, -0.18166408403602091, 0.78032074247992034, 0.023245656396302768},
    {0.59841264978853803, -0.18166408403602091, -0.78032074247992034, 0.023245656396302768},
    {-0.59841264978853803, 0.18166408403602091, -0.78032074247992034, 0.023245656396302768},
    {-0.59841264978853803, -0.18166408403602091, -0.78032074247992034, 0.023245656396302768},
    {0.18166408403602091, 0.59841264978853803, 0.78032074247992034, 0.023245656396302768},
    {-0.18166408403602091, 0.59841264978853803, 0.78032074247992034, 0.023245656396302768},
    {0.18166408403602091, -0.59841264978853803, 0.78032074247992034, 0.023245656396302768},
    {0.18166408403602091, 0.59841264978853803, -0.78032074247992034, 0.023245656396302768},
    {-0.18166408403602091, -0.59841264978853803, 0.78032074247992034, 0.023245656396302768},
    {0.18166408403602091, -0.59841264978853803, -0.78032074247992034, 0.023245656396302768},
    {-0.18166408403602091, 0.59841264978853803, -0.78032074247992034, 0.023245656396302768},
    {-0.18166408403602091, -0.59841264978853803, -0.78032074247992034, 0.023245656396302768},
    {0.78032074247992034, 0.59841264978853803, 0.18166408403602091, 0.023245656396302768},
    {-0.78032074247992034, 0.59841264978853803, 0.18166408403602091, 0.023245656396302768},
    {0.78032074247992034, -0.59841264978853803, 0.18166408403602091, 0.023245656396302768},
    {0.78032074247992034, 0.59841264978853803, -0.18166408403602091, 0.023245656396302768},
    {-0.78032074247992034, -0.59841264978853803, 0.18166408403602091, 0.023245656396302768},
    {0.78032074247992034, -0.59841264978853803, -0.18166408403602091, 0.023245656396302768},
    {-0.78032074247992034, 0.59841264978853803, -0.18166408403602091, 0.023245656396302768},
    {-0.78032074247992034, -0.59841264978853803, -0.18166408403602091, 0.023245656396302768},
    {0.78032074247992034, 0.18166408403602091, 0.59841264978853803, 0.023245656396302768},
    {-0.78032074247992034, 0.18166408403602091, 0.59841264978853803, 0.023245656396302768},
    {0.78032074247992034, -0.18166408403602091, 0.59841264978853803, 0.023245656396302768},
    {0.78032074247992034, 0.18166408403602091, -0.59841264978853803, 0.023245656396302768},
    {-0.78032074247992034, -0.18166408403602091, 0.59841264978853803, 0.023245656396302768},
    {0.78032074247992034, -0.18166408403602091, -0.59841264978853803, 0.023245656396302768},
    {-0.78032074247992034, 0.18166408403602091, -0.59841264978853803, 0.023245656396302768},
    {-0.78032074247992034, -0.18166408403602091, -0.59841264978853803, 0.023245656396302768},
    {0.59841264978853803, 0.78032074247992034, 0.18166408403602091, 0.023245656396302768},
    {-0.59841264978853803, 0.78032074247992034, 0.18166408403602091, 0.023245656396302768},
    {0.59841264978853803, -0.78032074247992034, 0.18166408403602091, 0.023245656396302768},
    {0.59841264978853803, 0.78032074247992034, -0.18166408403602091, 0.023245656396302768},
    {-0.59841264978853803, -0.78032074247992034, 0.18166408403602091, 0.023245656396302768},
    {0.59841264978853803, -0.78032074247992034, -0.18166408403602091, 0.023245656396302768},
    {-0.59841264978853803, 0.78032074247992034, -0.18166408403602091, 0.023245656396302768},
    {-0.59841264978853803, -0.78032074247992034, -0.18166408403602091, 0.023245656396302768},
    {0.18166408403602091, 0.78032074247992034, 0.59841264978853803, 0.023245656396302768},
    {-0.18166408403602091, 0.78032074247992034, 0.59841264978853803, 0.023245656396302768},
    {0.18166408403602091, -0.78032074247992034, 0.59841264978853803, 0.023245656396302768},
    {0.18166408403602091, 0.78032074247992034, -0.59841264978853803, 0.023245656396302768},
    {-0.18166408403602091, -0.78032074247992034, 0.59841264978853803, 0.023245656396302768},
    {0.18166408403602091, -0.78032074247992034, -0.59841264978853803, 0.023245656396302768},
    {-0.18166408403602091, 0.78032074247992034, -0.59841264978853803, 0.023245656396302768},
    {-0.18166408403602091, -0.78032074247992034, -0.59841264978853803, 0.023245656396302768},
    {0.37910354076955632, 0.17207952256568779, 0.9092134750923736, 0.021537559233923489},
    {-0.37910354076955632, 0.17207952256568779, 0.9092134750923736, 0.021537559233923489},
    {0.37910354076955632, -0.17207952256568779, 0.9092134750923736, 0.021537559233923489},
    {0.37910354076955632, 0.17207952256568779, -0.9092134750923736, 0.021537559233923489},
    {-0.37910354076955632, -0.17207952256568779, 0.9092134750923736, 0.021537559233923489},
    {0.37910354076955632, -0.17207952256568779, -0.9092134750923736, 0.021537559233923489},
    {-0.37910354076955632, 0.17207952256568779, -0.9092134750923736, 0.021537559233923489},
    {-0.37910354076955632, -0.17207952256568779, -0.9092134750923736, 0.021537559233923489},
    {0.17207952256568779, 0.37910354076955632, 0.9092134750923736, 0.021537559233923489},
    {-0.17207952256568779, 0.37910354076955632, 0.9092134750923736, 0.021537559233923489},
    {0.17207952256568779, -0.37910354076955632, 0.9092134750923736, 0.021537559233923489},
    {0.17207952256568779, 0.37910354076955632, -0.9092134750923736, 0.021537559233923489},
    {-0.17207952256568779, -0.37910354076955632, 0.9092134750923736, 0.021537559233923489},
    {0.17207952256568779, -0.37910354076955632, -0.9092134750923736, 0.021537559233923489},
    {-0.17207952256568779, 0.37910354076955632, -0.9092134750923736, 0.021537559233923489},
    {-0.17207952256568779, -0.37910354076955632, -0.9092134750923736, 0.021537559233923489},
    {0.9092134750923736, 0.37910354076955632, 0.17207952256568779, 0.021537559233923489},
    {-0.9092134750923736, 0.37910354076955632, 0.17207952256568779, 0.021537559233923489},
    {0.9092134750923736, -0.37910354076955632, 0.17207952256568779, 0.021537559233923489},
    {0.9092134750923736, 0.37910354076955632, -0.17207952256568779, 0.021537559233923489},
    {-0.9092134750923736, -0.37910354076955632, 0.17207952256568779, 0.021537559233923489},
    {0.9092134750923736, -0.37910354076955632, -0.17207952256568779, 0.021537559233923489},
    {-0.9092134750923736, 0.37910354076955632, -0.17207952256568779, 0.021537559233923489},
    {-0.9092134750923736, -0.37910354076955632, -0.17207952256568779, 0.021537559233923489},
    {0.9092134750923736, 0.17207952256568779, 0.37910354076955632, 0.021537559233923489},
    {-0.9092134750923736, 0.17207952256568779, 0.37910354076955632, 0.021537559233923489},
    {0.9092134750923736, -0.17207952256568779, 0.37910354076955632, 0.021537559233923489},
    {0.9092134750923736, 0.17207952256568779, -0.37910354076955632, 0.021537559233923489},
    {-0.9092134750923736, -0.17207952256568779, 0.37910354076955632, 0.021537559233923489},
    {0.9092134750923736, -0.17207952256568779, -0.37910354076955632, 0.021537559233923489},
    {-0.9092134750923736, 0.17207952256568779, -0.37910354076955632, 0.021537559233923489},
    {-0.9092134750923736, -0.17207952256568779, -0.37910354076955632, 0.021537559233923489},
    {0.37910354076955632, 0.9092134750923736, 0.17207952256568779, 0.021537559233923489},
    {-0.37910354076955632, 0.9092134750923736, 0.17207952256568779, 0.021537559233923489},
    {0.37910354076955632, -0.9092134750923736, 0.17207952256568779, 0.021537559233923489},
    {0.37910354076955632, 0.9092134750923736, -0.17207952256568779, 0.021537559233923489},
    {-0.37910354076955632, -0.9092134750923736, 0.17207952256568779, 0.021537559233923489},
    {0.37910354076955632, -0.9092134750923736, -0.17207952256568779, 0.021537559233923489},
    {-0.37910354076955632, 0.9092134750923736, -0.17207952256568779, 0.021537559233923489},
    {-0.37910354076955632, -0.9092134750923736, -0.17207952256568779, 0.021537559233923489},
    {0.17207952256568779, 0.9092134750923736, 0.37910354076955632, 0.021537559233923489},
    {-0.17207952256568779, 0.9092134750923736, 0.37910354076955632, 0.021537559233923489},
    {0.17207952256568779, -0.9092134750923736, 0.37910354076955632, 0.021537559233923489},
    {0.17207952256568779, 0.9092134750923736, -0.37910354076955632, 0.021537559233923489},
    {-0.17207952256568779, -0.9092134750923736, 0.37910354076955632, 0.021537559233923489},
    {0.17207952256568779, -0.9092134750923736, -0.37910354076955632, 0.021537559233923489},
    {-0.17207952256568779, 0.9092134750923736, -0.37910354076955632, 0.021537559233923489},
    {-0.17207952256568779, -0.9092134750923736, -0.37910354076955632, 0.021537559233923489},
    {0.27786731905862438, 0.082130215819325114, 0.95710207431007255, 0.019543390524777288},
    {-0.27786731905862438, 0.082130215819325114, 0.95710207431007255, 0.019543390524777288},
    {0.27786731905862438, -0.082130215819325114, 0.95710207431007255, 0.019543390524777288},
    {0.27786731905862438, 0.082130215819325114, -0.95710207431007255, 0.019543390524777288},
    {-0.27786731905862438, -0.082130215819325114, 0.95710207431007255, 0.019543390524777288},
    {0.27786731905862438, -0.082130215819325114, -0.95710207431007255, 0.019543390524777288},
    {-0.27786731905862438, 0.082130215819325114, -0.95710207431007255, 0.019543390524777288},
    {-0.27786731905862438, -0.082130215819325114, -0.95710207431007255, 0.019543390524777288},
    {0.082130215819325114, 0.27786731905862438, 0.95710207431007255, 0.019543390524777288},
    {-0.082130215819325114, 0.27786731905862438, 0.95710207431007255, 0.019543390524777288},
    {0.082130215819325114, -0.27786731905862438, 0.95710207431007255, 0.019543390524777288},
    {0.082130215819325114, 0.27786731905862438, -0.95710207431007255, 0.019543390524777288},
    {-0.082130215819325114, -0.27786731905862438, 0.95710207431007255, 0.019543390524777288},
    {0.082130215819325114, -0.27786731905862438, -0.95710207431007255, 0.019543390524777288},
    {-0.082130215819325114, 0.27786731905862438, -0.95710207431007255, 0.019543390524777288},
    {-0.082130215819325114, -0.27786731905862438, -0.95710207431007255, 0.019543390524777288},
    {0.95710207431007255, 0.27786731905862438, 0.082130215819325114, 0.019543390524777288},
    {-0.95710207431007255, 0.27786731905862438, 0.082130215819325114, 0.019543390524777288},
    {0.95710207431007255, -0.27786731905862438, 0.082130215819325114, 0.019543390524777288},
    {0.95710207431007255, 0.27786731905862438, -0.082130215819325114, 0.019543390524777288},
    {-0.95710207431007255, -0.27786731905862438, 0.082130215819325114, 0.019543390524777288},
    {0.95710207431007255, -0.27786731905862438, -0.082130215819325114, 0.019543390524777288},
    {-0.95710207431007255, 0.27786731905862438, -0.082130215819325114, 0.019543390524777288},
    {-0.95710207431007255, -0.27786731905862438, -0.082130215819325114, 0.019543390524777288},
    {0.95710207431007255, 0.082130215819325114, 0.27786731905862438, 0.019543390524777288},
    {-0.95710207431007255, 0.082130215819325114, 0.27786731905862438, 0.019543390524777288},
    {0.95710207431007255, -0.082130215819325114, 0.27786731905862438, 0.019543390524777288},
    {0.95710207431007255, 0.082130215819325114, -0.27786731905862438, 0.019543390524777288},
    {-0.95710207431007255, -0.082130215819325114, 0.27786731905862438, 0.019543390524777288},
    {0.95710207431007255, -0.082130215819325114, -0.27786731905862438, 0.019543390524777288},
    {-0.95710207431007255, 0.082130215819325114, -0.27786731905862438, 0.019543390524777288},
    {-0.95710207431007255, -0.082130215819325114, -0.27786731905862438, 0.019543390524777288},
    {0.27786731905862438, 0.95710207431007255, 0.082130215819325114, 0.019543390524777288},
    {-0.27786731905862438, 0.95710207431007255, 0.082130215819325114, 0.019543390524777288},
    {0.27786731905862438, -0.95710207431007255, 0.082130215819325114, 0.019543390524777288},
    {0.27786731905862438, 0.95710207431007255, -0.082130215819325114, 0.019543390524777288},
    {-0.27786731905862438, -0.95710207431007255, 0.082130215819325114, 0.019543390524777288},
    {0.27786731905862438, -0.95710207431007255, -0.082130215819325114, 0.019543390524777288},
    {-0.27786731905862438, 0.95710207431007255, -0.082130215819325114, 0.019543390524777288},
    {-0.27786731905862438, -0.95710207431007255, -0.082130215819325114, 0.019543390524777288},
    {0.082130215819325114, 0.95710207431007255, 0.27786731905862438, 0.019543390524777288},
    {-0.082130215819325114, 0.95710207431007255, 0.27786731905862438, 0.019543390524777288},
    {0.082130215819325114, -0.95710207431007255, 0.27786731905862438, 0.019543390524777288},
    {0.082130215819325114, 0.95710207431007255, -0.27786731905862438, 0.019543390524777288},
    {-0.082130215819325114, -0.95710207431007255, 0.27786731905862438, 0.019543390524777288},
    {0.082130215819325114, -0.95710207431007255, -0.27786731905862438, 0.019543390524777288},
    {-0.082130215819325114, 0.95710207431007255, -0.27786731905862438, 0.019543390524777288},
    {-0.082130215819325114, -0.95710207431007255, -0.27786731905862438, 0.019543390524777288},
    {0.50335642710751172, 0.089992058420748755, 0.85937985589072119, 0.022647604818254626},
    {-0.50335642710751172, 0.089992058420748755, 0.85937985589072119, 0.022647604818254626},
    {0.50335642710751172, -0.089992058420748755, 0.85937985589072119, 0.022647604818254626},
    {0.50335642710751172, 0.089992058420748755, -0.85937985589072119, 0.022647604818254626},
    {-0.50335642710751172, -0.089992058420748755, 0.85937985589072119, 0.022647604818254626},
    {0.50335642710751172, -0.089992058420748755, -0.85937985589072119, 0.022647604818254626},
    {-0.50335642710751172, 0.089992058420748755, -0.85937985589072119, 0.022647604818254626},
    {-0.50335642710751172, -0.089992058420748755, -0.85937985589072119, 0.022647604818254626},
    {0.089992058420748755, 0.50335642710751172, 0.85937985589072119, 0.022647604818254626},
    {-0.089992058420748755, 0.50335642710751172, 0.85937985589072119, 0.022647604818254626},
    {0.089992058420748755, -0.50335642710751172, 0.85937985589072119, 0.022647604818254626},
    {0.089992058420748755, 0.50335642710751172, -0.85937985589072119, 0.022647604818254626},
    {-0.089992058420748755, -0.50335642710751172, 0.85937985589072119, 0.022647604818254626},
    {0.089992058420748755, -0.50335642710751172, -0.85937985589072119, 0.022647604818254626},
    {-0.089992058420748755, 0.50335642710751172, -0.85937985589072119, 0.022647604818254626},
    {-0.089992058420748755, -0.50335642710751172, -0.85937985589072119, 0.022647604818254626},
    {0.85937985589072119, 0.50335642710751172, 0.089992058420748755, 0.022647604818254626},
    {-0.85937985589072119, 0.50335642710751172, 0.089992058420748755, 0.022647604818254626},
    {0.85937985589072119, -0.50335642710751172, 0.089992058420748755, 0.022647604818254626},
    {0.85937985589072119, 0.50335642710751172, -0.089992058420748755, 0.022647604818254626},
    {-0.85937985589072119, -0.50335642710751172, 0.089992058420748755, 0.022647604818254626},
    {0.85937985589072119, -0.50335642710751172, -0.089992058420748755, 0.022647604818254626},
    {-0.85937985589072119, 0.50335642710751172, -0.089992058420748755, 0.022647604818254626},
    {-0.85937985589072119, -0.50335642710751172, -0.089992058420748755, 0.022647604818254626},
    {0.85937985589072119, 0.089992058420748755, 0.50335642710751172, 0.022647604818254626},
    {-0.85937985589072119, 0.089992058420748755, 0.50335642710751172, 0.022647604818254626},
    {0.85937985589072119, -0.089992058420748755, 0.50335642710751172, 0.022647604818254626},
    {0.85937985589072119, 0.089992058420748755, -0.50335642710751172, 0.022647604818254626},
    {-0.85937985589072119, -0.089992058420748755, 0.50335642710751172, 0.022647604818254626},
    {0.85937985589072119, -0.089992058420748755, -0.50335642710751172, 0.022647604818254626},
    {-0.85937985589072119, 0.089992058420748755, -0.50335642710751172, 0.022647604818254626},
    {-0.85937985589072119, -0.089992058420748755, -0.50335642710751172, 0.022647604818254626},
    {0.50335642710751172, 0.85937985589072119, 0.089992058420748755, 0.022647604818254626},
    {-0.50335642710751172, 0.85937985589072119, 0.089992058420748755, 0.022647604818254626},
    {0.50335642710751172, -0.85937985589072119, 0.089992058420748755, 0.022647604818254626},
    {0.50335642710751172, 0.85937985589072119, -0.089992058420748755, 0.022647604818254626},
    {-0.50335642710751172, -0.85937985589072119, 0.089992058420748755, 0.022647604818254626},
    {0.50335642710751172, -0.85937985589072119, -0.089992058420748755, 0.022647604818254626},
    {-0.50335642710751172, 0.85937985589072119, -0.089992058420748755, 0.022647604818254626},
    {-0.50335642710751172, -0.85937985589072119, -0.089992058420748755, 0.022647604818254626},
    {0.089992058420748755, 0.85937985589072119, 0.50335642710751172, 0.022647604818254626},
    {-0.089992058420748755, 0.85937985589072119, 0.50335642710751172, 0.022647604818254626},
    {0.089992058420748755, -0.85937985589072119, 0.50335642710751172, 0.022647604818254626},
    {0.089992058420748755, 0.85937985589072119, -0.50335642710751172, 0.022647604818254626},
    {-0.089992058420748755, -0.85937985589072119, 0.50335642710751172, 0.022647604818254626},
    {0.089992058420748755, -0.85937985589072119, -0.50335642710751172, 0.022647604818254626},
    {-0.089992058420748755, 0.85937985589072119, -0.50335642710751172, 0.022647604818254626},
    {-0.089992058420748755, -0.85937985589072119, -0.50335642710751172, 0.022647604818254626},
};

}  // namespace emgest::detail
