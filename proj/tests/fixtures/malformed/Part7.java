package batch;

public class Part7 {
    public int value() {
        return 7;
    }
}
