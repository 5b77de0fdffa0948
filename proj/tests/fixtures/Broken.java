package fixtures;
public class Broken {
    public void f() {
        if (ready) {
    }
