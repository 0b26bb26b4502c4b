package app;

import util.Marker;

@Marker
public class Main {
    public static void run(BigCircle big) {
        big.pick(big);
    }
}
