// Calculator utilities.
package fixtures;

public class Calc {
    static final int MAX = 3;

    public int add(int a, int b) {
        return a + b;
    }

    /* multi-line
       comment */
    public int clamp(int v) {
        if (v > MAX && v >= 0) {
            for (int i = 0; i < v; i++) {
                v -= 1;
            }
        }
        return v < 0 ? 0 : v;
    }
}
