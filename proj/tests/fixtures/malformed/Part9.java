package batch;

public class Part9 {
    public int value() {
        return 9;
    }
}
