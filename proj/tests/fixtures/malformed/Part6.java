package batch;

public class Part6 {
    public int value() {
        return 6;
    }
}
